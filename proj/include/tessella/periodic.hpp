#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tessella/classifier.hpp"
#include "tessella/errors.hpp"
#include "tessella/tiling.hpp"

namespace tessella {

// Periodic layouts for tiles that tile the plane edge to edge.  Triangles and
// quadrilaterals get the classical half-turn constructions inline; pentagon
// and hexagon families run small frozen gluing programs (periodic.cpp) that
// place a handful of copies and name the translation lattice.

// One step of a gluing program: place a fresh copy of the prototile so that
// its edge child_slot coincides, full length, with edge parent_slot of an
// earlier copy.  Slots use the family labeling (edge slot k ends at vertex
// slot k).  reflect asks for a mirror-image copy, measured relative to a
// direct placement of the input labeling.
struct GlueStep {
  int parent;
  int parent_slot;
  int child_slot;
  bool reflect;
};

struct VertexRef {
  int tile;
  int slot;
};

// lattice vector spelled through labeled vertices of the placed cell:
// v = position(a) - position(b)
struct LatticeSpec {
  VertexRef a;
  VertexRef b;
};

// extra edge equality cutting a family down to its edge-to-edge subfamily
struct ExtraEdge {
  EdgeRel rel;
  const char* what;
};

struct LayoutProgram {
  std::vector<GlueStep> steps;  // cell size = steps.size() + 1
  LatticeSpec v1;
  LatticeSpec v2;
  std::vector<ExtraEdge> extra_edges;
};

// Frozen program for a pentagon/hexagon family, or null when the family has
// no edge-to-edge layout.  Defined in periodic.cpp.
const LayoutProgram* find_layout(const TileTypeId& t);

namespace detail {

// isometry taking segment (p0,p1) onto (q0,q1); the segments must have equal
// length or the result is not an isometry.  reflected selects z -> r*conj(z)+t.
template <typename S>
Isometry<S> segment_map(const Vec2<S>& p0, const Vec2<S>& p1,
                        const Vec2<S>& q0, const Vec2<S>& q1, bool reflected) {
  Vec2<S> dp = p1 - p0;
  Vec2<S> dq = q1 - q0;
  S plen2 = length_sq(dp);
  Isometry<S> g;
  g.reflected = reflected;
  if (!reflected) {
    g.rot_c = dot(dp, dq) / plen2;
    g.rot_s = cross(dp, dq) / plen2;
  } else {
    // r = dq / conj(dp) = dq * dp / |dp|^2
    g.rot_c = (dq.x * dp.x - dq.y * dp.y) / plen2;
    g.rot_s = (dq.x * dp.y + dq.y * dp.x) / plen2;
  }
  Vec2<S> image = g(p0);
  g.tx = q0.x - image.x;
  g.ty = q0.y - image.y;
  return g;
}

// Transform for a copy glued along an edge of an already placed copy.  Edge
// slot s has endpoints V(s-1), V(s) in the labeling; which endpoint lands
// where depends on the handedness of parent and child, since two tiles
// sharing a full edge traverse it in opposite boundary directions exactly
// when their orientations agree.
template <typename S>
Isometry<S> glue_transform(const LabeledPolygon<S>& lp,
                           const Isometry<S>& parent, int parent_slot,
                           int child_slot, bool reflect) {
  int n = static_cast<int>(lp.polygon.size());
  auto V = [&](int slot) {
    return lp.polygon.vertex(label_vertex(lp, ((slot % n) + n) % n));
  };
  Vec2<S> w0 = parent(V(parent_slot - 1));
  Vec2<S> w1 = parent(V(parent_slot));
  bool parent_orient = lp.reflected != parent.reflected;
  bool child_orient = lp.reflected != reflect;
  if (parent_orient == child_orient) std::swap(w0, w1);
  return segment_map(V(child_slot - 1), V(child_slot), w0, w1, reflect);
}

// Gauss reduction with integer steps: same lattice, shorter and less skewed
// basis, so the inscribed patch window stays usable for any tile shape.
template <typename S>
void reduce_basis(Vec2<S>& v1, Vec2<S>& v2) {
  for (int guard = 0; guard < 60; ++guard) {
    Vec2<double> d1 = as_double(v1), d2 = as_double(v2);
    double l1 = d1.x * d1.x + d1.y * d1.y;
    double l2 = d2.x * d2.x + d2.y * d2.y;
    if (l2 < l1) {
      std::swap(v1, v2);
      std::swap(l1, l2);
      std::swap(d1, d2);
    }
    long long k = llround((d1.x * d2.x + d1.y * d2.y) / l1);
    if (k == 0) return;
    Vec2<S> w = v2 - S(k) * v1;
    Vec2<double> dw = as_double(w);
    // accept only strict improvement; ties (half-integer projections) would
    // otherwise flip back and forth forever
    if (dw.x * dw.x + dw.y * dw.y >= l2 * (1 - 1e-12)) return;
    v2 = w;
  }
}

template <typename S>
FundamentalRegion<S> run_layout(const LabeledPolygon<S>& lp,
                                const LayoutProgram& prog,
                                const std::string& proto_name) {
  std::vector<Isometry<S>> gs;
  gs.reserve(prog.steps.size() + 1);
  gs.push_back(Isometry<S>::identity());
  for (const auto& st : prog.steps)
    gs.push_back(glue_transform(lp, gs.at(st.parent), st.parent_slot,
                                st.child_slot, st.reflect));
  FundamentalRegion<S> out;
  out.prototiles.emplace(proto_name,
                         MarkedPrototile<S>{proto_name, lp.polygon, {}});
  for (const auto& g : gs) out.tiles.push_back({proto_name, g});
  auto at = [&](const VertexRef& vr) {
    int n = static_cast<int>(lp.polygon.size());
    return gs.at(vr.tile)(
        lp.polygon.vertex(label_vertex(lp, ((vr.slot % n) + n) % n)));
  };
  out.v1 = at(prog.v1.a) - at(prog.v1.b);
  out.v2 = at(prog.v2.a) - at(prog.v2.b);
  reduce_basis(out.v1, out.v2);
  return out;
}

// The window must only touch ground covered by interior cells (lattice
// distance at least one cell from the patch boundary), so everything under it
// is surrounded by placed neighbors.  Inscribe the largest centered axis box
// into that covered union by shrinking until sampled boundary points all pass
// the point-in-interior-cell test.
template <typename S>
Rect inner_window(const FundamentalRegion<S>& r, int m, int n) {
  std::vector<std::vector<Vec2<double>>> cell;
  for (const auto& t : r.tiles) {
    auto poly =
        r.prototiles.at(t.prototile).polygon.transformed(t.transform);
    std::vector<Vec2<double>> v;
    v.reserve(poly.size());
    for (const auto& p : poly.verts()) v.push_back(as_double(p));
    cell.push_back(std::move(v));
  }
  auto poly_mean = [](const std::vector<Vec2<double>>& v) {
    Vec2<double> c{0, 0};
    for (const auto& p : v) {
      c.x += p.x / v.size();
      c.y += p.y / v.size();
    }
    return c;
  };
  Vec2<double> a1 = as_double(r.v1), a2 = as_double(r.v2);
  if (m < 3 || n < 3) {
    // no cell is fully interior; degenerate window inside a central tile
    Vec2<double> c = poly_mean(cell.front());
    c.x += (m / 2) * a1.x + (n / 2) * a2.x;
    c.y += (m / 2) * a1.y + (n / 2) * a2.y;
    return {c.x, c.y, c.x, c.y};
  }

  Rect cb{cell[0][0].x, cell[0][0].y, cell[0][0].x, cell[0][0].y};
  for (const auto& poly : cell)
    for (const auto& p : poly) cb.expand(p);
  double scale = std::max(cb.xmax - cb.xmin, cb.ymax - cb.ymin);
  double eps = 1e-9 * std::max(1.0, scale);

  int ihi = m - 2, jhi = n - 2;
  auto covered = [&](double x, double y) {
    for (int i = 1; i <= ihi; ++i)
      for (int j = 1; j <= jhi; ++j) {
        double qx = x - i * a1.x - j * a2.x;
        double qy = y - i * a1.y - j * a2.y;
        for (const auto& poly : cell) {
          bool in = true;
          size_t nn = poly.size();
          for (size_t k = 0; k < nn && in; ++k) {
            const auto& p = poly[k];
            const auto& q = poly[(k + 1) % nn];
            if ((q.x - p.x) * (qy - p.y) - (q.y - p.y) * (qx - p.x) < -eps)
              in = false;
          }
          if (in) return true;
        }
      }
    return false;
  };

  Vec2<double> c0{0, 0};
  for (const auto& poly : cell) {
    Vec2<double> c = poly_mean(poly);
    c0.x += c.x / cell.size();
    c0.y += c.y / cell.size();
  }
  Vec2<double> pc{c0.x + (1 + ihi) / 2.0 * a1.x + (1 + jhi) / 2.0 * a2.x,
                  c0.y + (1 + ihi) / 2.0 * a1.y + (1 + jhi) / 2.0 * a2.y};
  Rect hull{pc.x, pc.y, pc.x, pc.y};
  for (int i : {1, ihi})
    for (int j : {1, jhi}) {
      hull.expand({cb.xmin + i * a1.x + j * a2.x, cb.ymin + i * a1.y + j * a2.y});
      hull.expand({cb.xmax + i * a1.x + j * a2.x, cb.ymax + i * a1.y + j * a2.y});
    }
  double hx = (hull.xmax - hull.xmin) / 2;
  double hy = (hull.ymax - hull.ymin) / 2;
  auto fits = [&](double s) {
    const int K = 8;
    for (int k = 0; k <= K; ++k) {
      double f = -1.0 + 2.0 * k / K;
      if (!covered(pc.x + f * s * hx, pc.y - s * hy)) return false;
      if (!covered(pc.x + f * s * hx, pc.y + s * hy)) return false;
      if (!covered(pc.x - s * hx, pc.y + f * s * hy)) return false;
      if (!covered(pc.x + s * hx, pc.y + f * s * hy)) return false;
    }
    return true;
  };
  if (!covered(pc.x, pc.y)) {
    // centroid fell into a notch; anchor the window inside a central tile
    Vec2<double> c = poly_mean(cell.front());
    pc = {c.x + a1.x + a2.x, c.y + a1.y + a2.y};
  }
  double lo = 0, hi = 1;
  for (int it = 0; it < 40; ++it) {
    double s = (lo + hi) / 2;
    (fits(s) ? lo : hi) = s;
  }
  double s = lo * 0.999;
  return {pc.x - s * hx, pc.y - s * hy, pc.x + s * hx, pc.y + s * hy};
}

}  // namespace detail

// parallelogram from a triangle and its half turn about the midpoint of the
// edge opposite vertex 0
template <typename S>
FundamentalRegion<S> triangle_fundamental(const Polygon<S>& t,
                                          const std::string& name = "tile") {
  if (t.size() != 3)
    throw ClassifyError(ClassifyError::Kind::ClassMismatch,
                        "triangle expected");
  FundamentalRegion<S> out;
  out.prototiles.emplace(name, MarkedPrototile<S>{name, t, {}});
  out.tiles.push_back({name, Isometry<S>::identity()});
  Vec2<S> s = t.vertex(1) + t.vertex(2);
  out.tiles.push_back({name, Isometry<S>{S(-1), S(0), s.x, s.y, false}});
  out.v1 = t.vertex(1) - t.vertex(0);
  out.v2 = t.vertex(2) - t.vertex(0);
  detail::reduce_basis(out.v1, out.v2);
  return out;
}

// centrally symmetric hexagon from a quadrilateral and its half turn about
// the midpoint of edge 0; the lattice is spanned by the two diagonals (the
// half turns about consecutive edge midpoints compose to those translations)
template <typename S>
FundamentalRegion<S> quadrilateral_fundamental(const Polygon<S>& q,
                                               const std::string& name =
                                                   "tile") {
  if (q.size() != 4 || !q.convex())
    throw ClassifyError(ClassifyError::Kind::ClassMismatch,
                        "convex quadrilateral expected");
  FundamentalRegion<S> out;
  out.prototiles.emplace(name, MarkedPrototile<S>{name, q, {}});
  out.tiles.push_back({name, Isometry<S>::identity()});
  Vec2<S> s = q.vertex(0) + q.vertex(1);
  out.tiles.push_back({name, Isometry<S>{S(-1), S(0), s.x, s.y, false}});
  out.v1 = q.vertex(2) - q.vertex(0);
  out.v2 = q.vertex(3) - q.vertex(1);
  detail::reduce_basis(out.v1, out.v2);
  return out;
}

template <typename S>
FundamentalRegion<S> hexagon_fundamental(const LabeledPolygon<S>& h,
                                         const TileTypeId& t,
                                         double tol = 1e-6,
                                         const std::string& name = "tile") {
  if (t.cls != TileClass::Hexagon)
    throw ClassifyError(ClassifyError::Kind::UnsupportedType,
                        "hexagon type expected");
  if (!matches_type(h, t, tol))
    throw ClassifyError(ClassifyError::Kind::TypeConditionNotMet,
                        "hexagon does not satisfy the conditions of " +
                            type_name(t));
  const LayoutProgram* prog = find_layout(t);
  for (const auto& x : prog->extra_edges)
    if (!detail::eval_edge_rel(h, x.rel, tol))
      throw ClassifyError(ClassifyError::Kind::TypeConditionNotMet, x.what);
  return detail::run_layout(h, *prog, name);
}

template <typename S>
FundamentalRegion<S> pentagon_fundamental_e2e(const LabeledPolygon<S>& p,
                                              const TileTypeId& t,
                                              double tol = 1e-6,
                                              const std::string& name =
                                                  "tile") {
  if (t.cls != TileClass::Pentagon)
    throw ClassifyError(ClassifyError::Kind::UnsupportedType,
                        "pentagon type expected");
  const LayoutProgram* prog = find_layout(t);
  if (!prog)
    throw ClassifyError(ClassifyError::Kind::UnsupportedType,
                        type_name(t) + " admits no edge-to-edge tiling");
  if (!matches_type(p, t, tol))
    throw ClassifyError(ClassifyError::Kind::TypeConditionNotMet,
                        "pentagon does not satisfy the conditions of " +
                            type_name(t));
  for (const auto& x : prog->extra_edges)
    if (!detail::eval_edge_rel(p, x.rel, tol))
      throw ClassifyError(ClassifyError::Kind::TypeConditionNotMet, x.what);
  return detail::run_layout(p, *prog, name);
}

// m x n block of lattice translates of the region.  The window is pulled in
// by one full cell from the block boundary, so everything it touches is
// surrounded by placed neighbors.
template <typename S>
Tiling<S> generate_patch(const FundamentalRegion<S>& r, int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("generate_patch needs m, n >= 1");
  if (r.tiles.empty()) throw std::invalid_argument("empty fundamental region");
  Tiling<S> out;
  out.prototiles = r.prototiles;
  out.tiles.reserve(static_cast<size_t>(m) * n * r.tiles.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      Isometry<S> shift =
          Isometry<S>::translation(S(i) * r.v1 + S(j) * r.v2);
      for (const auto& t : r.tiles)
        out.tiles.push_back({t.prototile, shift * t.transform});
    }
  out.window = detail::inner_window(r, m, n);
  return out;
}

}  // namespace tessella
