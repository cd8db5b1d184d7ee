#pragma once

#include <cstdint>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tessella/tiling.hpp"

namespace tessella {

struct CoverageResult {
  std::vector<Vec2<double>> witnesses;
  double pitch = 0;
  std::string method = "grid-sampling";
};

template <typename S>
struct ValidationReport {
  std::vector<std::pair<size_t, size_t>> overlaps;
  std::vector<Vec2<double>> gaps;
  std::vector<std::pair<size_t, size_t>> edge_to_edge_violations;
  bool monohedral = true;
  std::optional<std::pair<Vec2<S>, Vec2<S>>> periodicity;
  double coverage_pitch = 0;
  std::string coverage_method;

  // monohedrality and periodicity are reported, not required, so a valid
  // multi-prototile tiling still passes
  bool all_pass() const {
    return overlaps.empty() && gaps.empty() && edge_to_edge_violations.empty();
  }
};

namespace detail {

template <typename S>
std::vector<Polygon<S>> realize_all(const Tiling<S>& t) {
  std::vector<Polygon<S>> out;
  out.reserve(t.tiles.size());
  for (size_t i = 0; i < t.tiles.size(); ++i) out.push_back(t.realize(i));
  return out;
}

inline double bbox_margin(const std::vector<Rect>& boxes) {
  double extent = 1.0;
  for (const auto& b : boxes) {
    extent = std::max(extent, std::abs(b.xmax));
    extent = std::max(extent, std::abs(b.ymax));
    extent = std::max(extent, std::abs(b.xmin));
    extent = std::max(extent, std::abs(b.ymin));
  }
  return 1e-6 * extent;
}

}  // namespace detail

template <typename S>
std::vector<std::pair<size_t, size_t>> check_no_overlap(const Tiling<S>& t) {
  auto polys = detail::realize_all(t);
  std::vector<Rect> boxes;
  boxes.reserve(polys.size());
  for (const auto& p : polys) boxes.push_back(p.bbox());
  double margin = detail::bbox_margin(boxes);
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = i + 1; j < polys.size(); ++j) {
      if (!boxes[i].intersects(boxes[j], margin)) continue;
      if (interiors_intersect(polys[i], polys[j])) out.push_back({i, j});
    }
  return out;
}

template <typename S>
CoverageResult check_coverage(const Tiling<S>& t, const Rect& window) {
  CoverageResult res;
  // pitch from the shortest prototile edge, an eighth of it
  double shortest = 0;
  for (const auto& [name, proto] : t.prototiles) {
    (void)name;
    for (size_t e = 0; e < proto.polygon.size(); ++e) {
      double len = std::sqrt(as_double(proto.polygon.edge_len_sq(e)));
      if (shortest == 0 || len < shortest) shortest = len;
    }
  }
  double w = window.xmax - window.xmin;
  double h = window.ymax - window.ymin;
  if (shortest == 0) shortest = std::max(w, h) / 2;
  double pitch = shortest / 8;
  // keep the sample grid bounded for absurd windows; the report declares it
  while ((w / pitch + 1) * (h / pitch + 1) > 4e6) pitch *= 2;
  res.pitch = pitch;
  res.method = "grid-sampling";

  // triangulated double copies of every tile, bucketed over the window
  struct Tri {
    Vec2<double> a, b, c;
  };
  std::vector<Tri> tris;
  std::vector<Rect> tri_boxes;
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    auto poly = t.realize(i);
    const auto& v = poly.verts();
    auto push = [&](size_t x, size_t y, size_t z) {
      Tri tr{as_double(v[x]), as_double(v[y]), as_double(v[z])};
      Rect r{tr.a.x, tr.a.y, tr.a.x, tr.a.y};
      r.expand(tr.b);
      r.expand(tr.c);
      tris.push_back(tr);
      tri_boxes.push_back(r);
    };
    if (poly.convex()) {
      for (size_t k = 2; k < v.size(); ++k) push(0, k - 1, k);
    } else {
      for (const auto& tr : detail::triangulate(v)) push(tr[0], tr[1], tr[2]);
    }
  }

  int nx = static_cast<int>(std::ceil(w / pitch)) + 1;
  int ny = static_cast<int>(std::ceil(h / pitch)) + 1;
  const int cells = 64;
  std::vector<std::vector<uint32_t>> grid(cells * cells);
  auto cell_of = [&](double x, double y) {
    int cx = std::clamp(static_cast<int>((x - window.xmin) / (w + 1e-300) * cells), 0, cells - 1);
    int cy = std::clamp(static_cast<int>((y - window.ymin) / (h + 1e-300) * cells), 0, cells - 1);
    return cy * cells + cx;
  };
  for (uint32_t ti = 0; ti < tris.size(); ++ti) {
    const Rect& r = tri_boxes[ti];
    int cx0 = std::clamp(static_cast<int>((r.xmin - window.xmin) / (w + 1e-300) * cells), 0, cells - 1);
    int cx1 = std::clamp(static_cast<int>((r.xmax - window.xmin) / (w + 1e-300) * cells), 0, cells - 1);
    int cy0 = std::clamp(static_cast<int>((r.ymin - window.ymin) / (h + 1e-300) * cells), 0, cells - 1);
    int cy1 = std::clamp(static_cast<int>((r.ymax - window.ymin) / (h + 1e-300) * cells), 0, cells - 1);
    for (int cy = cy0; cy <= cy1; ++cy)
      for (int cx = cx0; cx <= cx1; ++cx) grid[cy * cells + cx].push_back(ti);
  }

  double slack = tolerance() * (1 + std::max(w, h));
  auto covered = [&](double x, double y) {
    for (uint32_t ti : grid[cell_of(x, y)]) {
      const Tri& tr = tris[ti];
      double c1 = (tr.b.x - tr.a.x) * (y - tr.a.y) - (tr.b.y - tr.a.y) * (x - tr.a.x);
      double c2 = (tr.c.x - tr.b.x) * (y - tr.b.y) - (tr.c.y - tr.b.y) * (x - tr.b.x);
      double c3 = (tr.a.x - tr.c.x) * (y - tr.c.y) - (tr.a.y - tr.c.y) * (x - tr.c.x);
      if (c1 >= -slack && c2 >= -slack && c3 >= -slack) return true;
    }
    return false;
  };

  std::vector<uint8_t> miss(static_cast<size_t>(nx) * ny, 0);
  for (int iy = 0; iy < ny; ++iy) {
    double y = window.ymin + iy * pitch;
    if (y > window.ymax) y = window.ymax;
    for (int ix = 0; ix < nx; ++ix) {
      double x = window.xmin + ix * pitch;
      if (x > window.xmax) x = window.xmax;
      if (!covered(x, y)) miss[static_cast<size_t>(iy) * nx + ix] = 1;
    }
  }

  // one witness per connected cluster of missed samples
  std::vector<uint8_t> seen(miss.size(), 0);
  for (size_t start = 0; start < miss.size(); ++start) {
    if (!miss[start] || seen[start]) continue;
    std::deque<size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      size_t cur = queue.front();
      queue.pop_front();
      int cx = static_cast<int>(cur % nx);
      int cy = static_cast<int>(cur / nx);
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          int jx = cx + dx, jy = cy + dy;
          if (jx < 0 || jy < 0 || jx >= nx || jy >= ny) continue;
          size_t j = static_cast<size_t>(jy) * nx + jx;
          if (miss[j] && !seen[j]) {
            seen[j] = 1;
            queue.push_back(j);
          }
        }
    }
    int cx = static_cast<int>(start % nx);
    int cy = static_cast<int>(start / nx);
    res.witnesses.push_back({std::min(window.xmin + cx * pitch, window.xmax),
                             std::min(window.ymin + cy * pitch, window.ymax)});
  }
  return res;
}

template <typename S>
std::vector<std::pair<size_t, size_t>> check_edge_to_edge(const Tiling<S>& t) {
  auto polys = detail::realize_all(t);
  std::vector<Rect> boxes;
  boxes.reserve(polys.size());
  for (const auto& p : polys) boxes.push_back(p.bbox());
  double margin = detail::bbox_margin(boxes);
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i < polys.size(); ++i) {
    for (size_t j = i + 1; j < polys.size(); ++j) {
      if (!boxes[i].intersects(boxes[j], margin)) continue;
      bool bad = false;
      for (size_t e = 0; e < polys[i].size() && !bad; ++e) {
        Vec2<S> a = polys[i].vertex(e);
        Vec2<S> b = polys[i].vertex(e + 1);
        for (size_t f = 0; f < polys[j].size() && !bad; ++f) {
          Vec2<S> c = polys[j].vertex(f);
          Vec2<S> d = polys[j].vertex(f + 1);
          if (!segments_overlap_collinear(a, b, c, d)) continue;
          // positive-length overlap; fine only when it is the same full edge
          bool same = (scalar_eq(a.x, c.x) && scalar_eq(a.y, c.y) &&
                       scalar_eq(b.x, d.x) && scalar_eq(b.y, d.y)) ||
                      (scalar_eq(a.x, d.x) && scalar_eq(a.y, d.y) &&
                       scalar_eq(b.x, c.x) && scalar_eq(b.y, c.y));
          if (!same) bad = true;
        }
      }
      if (bad) out.push_back({i, j});
    }
  }
  return out;
}

template <typename S>
bool check_monohedral(const Tiling<S>& t) {
  if (t.tiles.empty()) return true;
  // images of one prototile are congruent by construction, so it suffices to
  // compare the distinct prototiles actually referenced
  std::vector<const Polygon<S>*> used;
  std::unordered_set<std::string> names;
  for (const auto& tile : t.tiles)
    if (names.insert(tile.prototile).second)
      used.push_back(&t.prototiles.at(tile.prototile).polygon);
  for (size_t i = 1; i < used.size(); ++i)
    if (!congruent(*used[0], *used[i], true).has_value()) return false;
  return true;
}

namespace detail {

template <typename S>
std::vector<Vec2<S>> sorted_verts(const Polygon<S>& p) {
  std::vector<Vec2<S>> v = p.verts();
  std::sort(v.begin(), v.end(), [](const Vec2<S>& a, const Vec2<S>& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  return v;
}

inline void key_scalar(std::ostringstream& os, double v) {
  os << v << '|';
}
inline void key_scalar(std::ostringstream& os, const Exact& v) {
  os << v.str() << '|';
}

template <typename S>
std::string vertex_key(const std::vector<Vec2<S>>& sorted) {
  std::ostringstream os;
  for (const auto& p : sorted) {
    key_scalar(os, p.x);
    key_scalar(os, p.y);
  }
  return os.str();
}

template <typename S>
bool verts_equal(const std::vector<Vec2<S>>& a, const std::vector<Vec2<S>>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!scalar_eq(a[i].x, b[i].x) || !scalar_eq(a[i].y, b[i].y)) return false;
  return true;
}

// strictly inside by a margin: crossing parity plus distance to every edge
inline bool clearly_inside(const std::vector<Vec2<double>>& poly,
                           Vec2<double> p, double eps) {
  size_t n = poly.size();
  bool odd = false;
  for (size_t i = 0; i < n; ++i) {
    Vec2<double> a = poly[i], b = poly[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      double xc = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < xc) odd = !odd;
    }
    Vec2<double> d{b.x - a.x, b.y - a.y};
    double len2 = d.x * d.x + d.y * d.y;
    double t = len2 > 0 ? ((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2 : 0;
    t = std::clamp(t, 0.0, 1.0);
    double dx = p.x - (a.x + t * d.x), dy = p.y - (a.y + t * d.y);
    if (dx * dx + dy * dy < eps * eps) return false;
  }
  return odd;
}

}  // namespace detail

// Searches translation candidates drawn from differences between tiles placed
// with the same rotation and handedness of congruent prototiles.  A candidate
// passes when every tile centered in the window lands exactly on a tile of
// the patch after translation, and enough tiles were actually testable for
// the claim not to be vacuous.  Windows are interior to their patch, so the
// translate of a window tile must be present if the patch is periodic.
template <typename S>
std::optional<std::pair<Vec2<S>, Vec2<S>>> detect_periodicity(
    const Tiling<S>& t) {
  size_t n = t.tiles.size();
  if (n < 2) return std::nullopt;
  auto polys = detail::realize_all(t);

  // congruence class per prototile name
  std::unordered_map<std::string, int> class_of;
  {
    std::vector<std::string> names;
    for (const auto& [name, proto] : t.prototiles) names.push_back(name);
    std::vector<int> cls(names.size(), -1);
    int next = 0;
    for (size_t i = 0; i < names.size(); ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = next++;
      for (size_t j = i + 1; j < names.size(); ++j) {
        if (cls[j] >= 0) continue;
        if (congruent(t.prototiles.at(names[i]).polygon,
                      t.prototiles.at(names[j]).polygon, true))
          cls[j] = cls[i];
      }
    }
    for (size_t i = 0; i < names.size(); ++i) class_of[names[i]] = cls[i];
  }

  auto signature = [&](size_t i) {
    std::ostringstream os;
    os << class_of[t.tiles[i].prototile] << '|'
       << (t.tiles[i].transform.reflected ? 'r' : 'd') << '|';
    detail::key_scalar(os, t.tiles[i].transform.rot_c);
    detail::key_scalar(os, t.tiles[i].transform.rot_s);
    return os.str();
  };

  std::unordered_map<std::string, std::vector<size_t>> groups;
  for (size_t i = 0; i < n; ++i) groups[signature(i)].push_back(i);

  struct Candidate {
    Vec2<S> v;
    double len;
  };
  std::vector<Candidate> cands;
  std::unordered_set<std::string> cand_seen;
  auto add_candidate = [&](const Vec2<S>& v) {
    if (sgn(v.x) == 0 && sgn(v.y) == 0) return;
    std::ostringstream os;
    detail::key_scalar(os, v.x);
    detail::key_scalar(os, v.y);
    if (!cand_seen.insert(os.str()).second) return;
    Vec2<double> d = as_double(v);
    cands.push_back({v, std::hypot(d.x, d.y)});
  };
  for (const auto& [sig, members] : groups) {
    (void)sig;
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        const auto& ga = t.tiles[members[a]].transform;
        const auto& gb = t.tiles[members[b]].transform;
        Vec2<S> v{gb.tx - ga.tx, gb.ty - ga.ty};
        add_candidate(v);
        add_candidate(-v);
      }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.len != b.len) return a.len < b.len;
    return std::make_pair(as_double(a.v.x), as_double(a.v.y)) <
           std::make_pair(as_double(b.v.x), as_double(b.v.y));
  });

  std::vector<std::vector<Vec2<S>>> sorted;
  sorted.reserve(n);
  for (const auto& p : polys) sorted.push_back(detail::sorted_verts(p));
  std::unordered_map<std::string, size_t> by_key;
  for (size_t i = 0; i < n; ++i) by_key[detail::vertex_key(sorted[i])] = i;

  double extent = std::max(t.window.xmax - t.window.xmin,
                           t.window.ymax - t.window.ymin);
  double slack = 1e-7 * std::max(1.0, extent);
  // evidence pool: tiles whose center falls in the window
  std::vector<size_t> pool;
  std::vector<Vec2<double>> centers(n);
  std::vector<std::vector<Vec2<double>>> dverts(n);
  std::vector<Rect> boxes;
  boxes.reserve(n);
  double scale = 0;
  for (size_t i = 0; i < n; ++i) {
    centers[i] = polys[i].vertex_mean();
    dverts[i].reserve(polys[i].size());
    for (const auto& p : polys[i].verts()) dverts[i].push_back(as_double(p));
    Rect b = polys[i].bbox();
    boxes.push_back(b);
    scale = std::max({scale, b.xmax - b.xmin, b.ymax - b.ymin});
    const Vec2<double>& c = centers[i];
    if (c.x >= t.window.xmin - slack && c.x <= t.window.xmax + slack &&
        c.y >= t.window.ymin - slack && c.y <= t.window.ymax + slack)
      pool.push_back(i);
  }
  if (pool.size() < 2) {
    // window too small to hold two tiles; judge from the whole patch, the
    // refutation rule below still rejects impostors
    pool.resize(n);
    std::iota(pool.begin(), pool.end(), size_t{0});
  }
  size_t need = std::max<size_t>(2, pool.size() / 8);
  double ieps = 1e-7 * std::max(1.0, scale);

  // Translating a pool tile gives evidence when the image coincides with a
  // placed tile, refutes the candidate when it lands in the middle of the
  // patch without coinciding, and says nothing when it falls off the edge.
  auto accepted = [&](const Candidate& cand) {
    Vec2<double> dv = as_double(cand.v);
    size_t evidence = 0;
    for (size_t i : pool) {
      std::vector<Vec2<S>> moved_verts = sorted[i];
      for (auto& p : moved_verts) p = p + cand.v;
      auto it = by_key.find(detail::vertex_key(moved_verts));
      bool hit = it != by_key.end();
      if (!hit) {  // float backend: fall back to tolerant comparison
        for (size_t j = 0; j < n && !hit; ++j)
          if (detail::verts_equal(moved_verts, sorted[j])) hit = true;
      }
      if (hit) {
        ++evidence;
        continue;
      }
      Vec2<double> c{centers[i].x + dv.x, centers[i].y + dv.y};
      for (size_t j = 0; j < n; ++j) {
        if (c.x < boxes[j].xmin - ieps || c.x > boxes[j].xmax + ieps ||
            c.y < boxes[j].ymin - ieps || c.y > boxes[j].ymax + ieps)
          continue;
        if (detail::clearly_inside(dverts[j], c, ieps)) return false;
      }
    }
    return evidence >= need;
  };

  std::optional<Vec2<S>> v1;
  for (const auto& cand : cands) {
    if (!accepted(cand)) continue;
    if (!v1) {
      v1 = cand.v;
      continue;
    }
    if (sgn(cross(*v1, cand.v)) != 0)
      return std::make_pair(*v1, cand.v);
  }
  return std::nullopt;
}

template <typename S>
ValidationReport<S> validate_all(const Tiling<S>& t) {
  ValidationReport<S> rep;
  rep.overlaps = check_no_overlap(t);
  auto cov = check_coverage(t, t.window);
  rep.gaps = cov.witnesses;
  rep.coverage_pitch = cov.pitch;
  rep.coverage_method = cov.method;
  rep.edge_to_edge_violations = check_edge_to_edge(t);
  rep.monohedral = check_monohedral(t);
  rep.periodicity = detect_periodicity(t);
  return rep;
}

}  // namespace tessella
