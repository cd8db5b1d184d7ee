#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tessella/errors.hpp"
#include "tessella/isometry.hpp"
#include "tessella/segment.hpp"

namespace tessella {

template <typename S>
class Polygon;

template <typename S>
Polygon<S> make_polygon(std::vector<Vec2<S>> points);
template <typename S>
Polygon<S> make_simple_polygon(std::vector<Vec2<S>> points);

// Vertex cycle stored counterclockwise.  make_polygon enforces strict
// convexity; make_simple_polygon admits reflex vertices (the dart needs this)
// but still rejects self-intersection and collinear degeneracies.
template <typename S>
class Polygon {
 public:
  size_t size() const { return verts_.size(); }
  const std::vector<Vec2<S>>& verts() const { return verts_; }
  const Vec2<S>& vertex(size_t i) const { return verts_[i % verts_.size()]; }
  bool convex() const { return convex_; }

  // edge i runs from vertex i to vertex i+1
  Vec2<S> edge_vec(size_t i) const {
    return vertex(i + 1) - vertex(i);
  }
  S edge_len_sq(size_t i) const { return length_sq(edge_vec(i)); }

  S area() const {
    S twice{0};
    for (size_t i = 0; i < verts_.size(); ++i)
      twice = twice + cross(vertex(i), vertex(i + 1));
    return twice / S(2);
  }

  Vec2<double> vertex_mean() const {
    Vec2<double> m{0, 0};
    for (const auto& v : verts_) {
      m.x += as_double(v.x);
      m.y += as_double(v.y);
    }
    m.x /= verts_.size();
    m.y /= verts_.size();
    return m;
  }

  Rect bbox() const {
    Vec2<double> first = as_double(verts_[0]);
    Rect r{first.x, first.y, first.x, first.y};
    for (size_t i = 1; i < verts_.size(); ++i) r.expand(as_double(verts_[i]));
    return r;
  }

  Polygon transformed(const Isometry<S>& g) const {
    Polygon out;
    out.convex_ = convex_;
    out.verts_.reserve(verts_.size());
    if (!g.reflected) {
      for (const auto& v : verts_) out.verts_.push_back(g(v));
    } else {
      // reversal keeps the stored cycle counterclockwise
      for (auto it = verts_.rbegin(); it != verts_.rend(); ++it)
        out.verts_.push_back(g(*it));
    }
    return out;
  }

  friend Polygon make_polygon<S>(std::vector<Vec2<S>> points);
  friend Polygon make_simple_polygon<S>(std::vector<Vec2<S>> points);

 private:
  Polygon() = default;
  std::vector<Vec2<S>> verts_;
  bool convex_ = true;
};

namespace detail {

template <typename S>
void check_simple(const std::vector<Vec2<S>>& v) {
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        throw GeometryError(GeometryError::Kind::SelfIntersecting,
                            "non-adjacent edges intersect");
    }
  }
}

template <typename S>
std::vector<Vec2<S>> normalize_cycle(std::vector<Vec2<S>> pts) {
  if (pts.size() < 3)
    throw GeometryError(GeometryError::Kind::DegenerateCollinear,
                        "polygon needs at least 3 vertices");
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i)
    if (pts[i] == pts[(i + 1) % n])
      throw GeometryError(GeometryError::Kind::DegenerateCollinear,
                          "repeated vertex");
  S twice{0};
  for (size_t i = 0; i < n; ++i)
    twice = twice + cross(pts[i], pts[(i + 1) % n]);
  int s = sgn(twice);
  if (s == 0)
    throw GeometryError(GeometryError::Kind::DegenerateCollinear,
                        "zero-area vertex cycle");
  if (s < 0) std::reverse(pts.begin(), pts.end());
  return pts;
}

}  // namespace detail

template <typename S>
Polygon<S> make_polygon(std::vector<Vec2<S>> points) {
  auto pts = detail::normalize_cycle(std::move(points));
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    int turn = orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
    if (turn == 0)
      throw GeometryError(GeometryError::Kind::DegenerateCollinear,
                          "three consecutive vertices are collinear");
    if (turn < 0)
      throw GeometryError(GeometryError::Kind::NonConvex,
                          "reflex vertex in polygon");
  }
  // all turns counterclockwise can still wind twice (star polygons)
  detail::check_simple(pts);
  Polygon<S> p;
  p.verts_ = std::move(pts);
  p.convex_ = true;
  return p;
}

template <typename S>
Polygon<S> make_simple_polygon(std::vector<Vec2<S>> points) {
  auto pts = detail::normalize_cycle(std::move(points));
  size_t n = pts.size();
  bool convex = true;
  for (size_t i = 0; i < n; ++i) {
    int turn = orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
    if (turn == 0)
      throw GeometryError(GeometryError::Kind::DegenerateCollinear,
                          "three consecutive vertices are collinear");
    if (turn < 0) convex = false;
  }
  detail::check_simple(pts);
  Polygon<S> p;
  p.verts_ = std::move(pts);
  p.convex_ = convex;
  return p;
}

// interior angle at each vertex, radians; reflex vertices give angles above pi
template <typename S>
std::vector<double> interior_angles(const Polygon<S>& p) {
  size_t n = p.size();
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) {
    Vec2<double> u = as_double(p.edge_vec((i + n - 1) % n));
    Vec2<double> w = as_double(p.edge_vec(i));
    double turn = std::atan2(cross(u, w), dot(u, w));
    out[i] = 3.14159265358979323846 - turn;
  }
  return out;
}

namespace detail {

// rotation+translation mapping p's cycle onto q's starting at q[offset]
template <typename S>
std::optional<Isometry<S>> cycle_map(const std::vector<Vec2<S>>& p,
                                     const std::vector<Vec2<S>>& q,
                                     size_t offset) {
  size_t n = p.size();
  Vec2<S> pe = p[1] - p[0];
  Vec2<S> qe = q[(offset + 1) % n] - q[offset];
  S plen = length_sq(pe);
  if (!scalar_eq(plen, length_sq(qe))) return std::nullopt;
  // r = qe / pe, unit because the lengths agree
  S c = (dot(pe, qe)) / plen;
  S s = (cross(pe, qe)) / plen;
  Isometry<S> g{c, s, S(0), S(0), false};
  Vec2<S> image = g(p[0]);
  g.tx = q[offset].x - image.x;
  g.ty = q[offset].y - image.y;
  for (size_t i = 0; i < n; ++i) {
    Vec2<S> got = g(p[i]);
    Vec2<S> want = q[(offset + i) % n];
    if (!scalar_eq(got.x, want.x) || !scalar_eq(got.y, want.y))
      return std::nullopt;
  }
  return g;
}

}  // namespace detail

template <typename S>
std::optional<Isometry<S>> congruent(const Polygon<S>& p, const Polygon<S>& q,
                                     bool allow_reflection) {
  if (p.size() != q.size()) return std::nullopt;
  size_t n = p.size();
  for (size_t off = 0; off < n; ++off)
    if (auto g = detail::cycle_map(p.verts(), q.verts(), off)) return g;
  if (!allow_reflection) return std::nullopt;
  // mirror p across the x axis, then look for a direct map of the mirror
  std::vector<Vec2<S>> mirrored;
  mirrored.reserve(n);
  for (auto it = p.verts().rbegin(); it != p.verts().rend(); ++it)
    mirrored.push_back({it->x, -it->y});
  for (size_t off = 0; off < n; ++off) {
    if (auto g = detail::cycle_map(mirrored, q.verts(), off)) {
      Isometry<S> m;
      m.reflected = true;
      return *g * m;
    }
  }
  return std::nullopt;
}

namespace detail {

// convex separating-axis test on open interiors: touching counts as disjoint
template <typename S>
bool convex_interiors_intersect(const std::vector<Vec2<S>>& a,
                                const std::vector<Vec2<S>>& b) {
  auto separated_by_edges_of = [](const std::vector<Vec2<S>>& edges,
                                  const std::vector<Vec2<S>>& other) {
    size_t n = edges.size();
    for (size_t i = 0; i < n; ++i) {
      Vec2<S> e = edges[(i + 1) % n] - edges[i];
      Vec2<S> normal{-e.y, e.x};  // inward for CCW
      // other lies entirely on or outside this edge's line?
      bool all_outside = true;
      for (const auto& v : other) {
        Vec2<S> w = v - edges[i];
        S d = dot(normal, w);
        bool in;
        if constexpr (std::is_same_v<S, double>) {
          // threshold relative to the coordinate magnitude, an absolute one
          // drowns in roundoff once coordinates are large
          double nd = std::hypot(normal.x, normal.y);
          double md = std::hypot(w.x, w.y) + std::hypot(edges[i].x, edges[i].y);
          in = d > tolerance() * nd * (md + 1.0);
        } else {
          in = sgn(d) > 0;
        }
        if (in) {
          all_outside = false;
          break;
        }
      }
      if (all_outside) return true;
    }
    return false;
  };
  if (separated_by_edges_of(a, b)) return false;
  if (separated_by_edges_of(b, a)) return false;
  return true;
}

// ear clipping; input counterclockwise, output index triples
template <typename S>
std::vector<std::array<size_t, 3>> triangulate(const std::vector<Vec2<S>>& v) {
  std::vector<size_t> idx(v.size());
  for (size_t i = 0; i < v.size(); ++i) idx[i] = i;
  std::vector<std::array<size_t, 3>> tris;
  size_t guard = 0;
  while (idx.size() > 3) {
    bool clipped = false;
    for (size_t k = 0; k < idx.size(); ++k) {
      size_t ia = idx[(k + idx.size() - 1) % idx.size()];
      size_t ib = idx[k];
      size_t ic = idx[(k + 1) % idx.size()];
      if (orientation(v[ia], v[ib], v[ic]) <= 0) continue;
      bool ear = true;
      for (size_t other : idx) {
        if (other == ia || other == ib || other == ic) continue;
        // inside or on the candidate ear disqualifies it
        if (orientation(v[ia], v[ib], v[other]) >= 0 &&
            orientation(v[ib], v[ic], v[other]) >= 0 &&
            orientation(v[ic], v[ia], v[other]) >= 0) {
          ear = false;
          break;
        }
      }
      if (!ear) continue;
      tris.push_back({ia, ib, ic});
      idx.erase(idx.begin() + k);
      clipped = true;
      break;
    }
    if (!clipped || ++guard > 10000)
      throw GeometryError(GeometryError::Kind::SelfIntersecting,
                          "triangulation failed");
  }
  tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

}  // namespace detail

template <typename S>
bool interiors_intersect(const Polygon<S>& p, const Polygon<S>& q) {
  if (p.convex() && q.convex())
    return detail::convex_interiors_intersect(p.verts(), q.verts());
  auto pieces = [](const Polygon<S>& poly) {
    std::vector<std::vector<Vec2<S>>> out;
    if (poly.convex()) {
      out.push_back(poly.verts());
      return out;
    }
    for (const auto& t : detail::triangulate(poly.verts()))
      out.push_back({poly.verts()[t[0]], poly.verts()[t[1]], poly.verts()[t[2]]});
    return out;
  };
  for (const auto& a : pieces(p))
    for (const auto& b : pieces(q))
      if (detail::convex_interiors_intersect(a, b)) return true;
  return false;
}

}  // namespace tessella
