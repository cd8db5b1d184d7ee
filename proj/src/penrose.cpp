#include "tessella/penrose.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tessella/periodic.hpp"

namespace tessella {

namespace {

using V = Vec2<Exact>;
using Iso = Isometry<Exact>;

// ------------------------------------------------------------------ geometry

// Everything is spelled through cos36 = (1+sqrt5)/4 and sin36, so all
// placements stay inside the exact scalar field.  The rhombi are cut along
// one diagonal into isoceles triangle halves: the thick one along A-C into
// two obtuse (36-36-108) triangles with legs 1 and base phi, the thin one
// along F-H into two acute (72-72-36) triangles with legs 1 and base 1/phi.
// Triangle prototypes sit base-down on the x axis, apex above.
struct Shared {
  Exact c36, s36, c72, s72, phi, inv_phi;
  V A, B, C, D;  // thick rhombus, A at the origin, edge AB along the axis
  V E, F, G, H;  // thin rhombus, same convention
  Polygon<Exact> thick, thin;
  Iso sigma;                      // y-flip
  Iso half_thick, half_thin;      // triangle prototype -> one rhombus half
  Iso unhalf_thick, unhalf_thin;  // their inverses
  Iso mirror_thick, mirror_thin;  // reflections across the cut diagonals
};

const Shared& sh() {
  static const Shared s = [] {
    Shared k;
    k.s36 = Exact::s36();
    k.c36 = (Exact(1) + Exact::sqrt5()) / Exact(4);
    k.c72 = (Exact::sqrt5() - Exact(1)) / Exact(4);
    k.phi = (Exact(1) + Exact::sqrt5()) / Exact(2);
    k.inv_phi = (Exact::sqrt5() - Exact(1)) / Exact(2);
    k.s72 = k.s36 * k.phi;
    k.A = {Exact(0), Exact(0)};
    k.B = {Exact(1), Exact(0)};
    k.C = {Exact(1) + k.c72, k.s72};
    k.D = {k.c72, k.s72};
    k.E = {Exact(0), Exact(0)};
    k.F = {Exact(1), Exact(0)};
    k.G = {Exact(1) + k.c36, k.s36};
    k.H = {k.c36, k.s36};
    k.thick = make_polygon<Exact>({k.A, k.B, k.C, k.D});
    k.thin = make_polygon<Exact>({k.E, k.F, k.G, k.H});
    k.sigma = Iso{Exact(1), Exact(0), Exact(0), Exact(0), true};
    V o{Exact(0), Exact(0)};
    k.half_thick =
        detail::segment_map(o, V{k.phi, Exact(0)}, k.C, k.A, false);
    k.half_thin =
        detail::segment_map(o, V{k.inv_phi, Exact(0)}, k.F, k.H, false);
    k.unhalf_thick = inverse(k.half_thick);
    k.unhalf_thin = inverse(k.half_thin);
    // conjugating the y-flip through the half map gives exactly the
    // reflection across the cut diagonal, which both markings are symmetric
    // under; it folds the two halves of a rhombus onto the same pose
    k.mirror_thick = k.half_thick * k.sigma * k.unhalf_thick;
    k.mirror_thin = k.half_thin * k.sigma * k.unhalf_thin;
    return k;
  }();
  return s;
}

// ------------------------------------------------------------------ markings

// Vertex color classes, one letter per corner in cycle order.  They are the
// classes forced on the corners by which of them meet at common points of
// substitution patches; docs/penrose.md walks through the derivation.
const char* kThickColors[4] = {"", "", "", ""};
const char* kThinColors[4] = {"", "", "", ""};
const char* kKiteColors[4] = {"", "", "", ""};
const char* kDartColors[4] = {"", "", "", ""};

Marking thick_marking() {
  Marking m;
  m.vertex_colors = {kThickColors[0], kThickColors[1], kThickColors[2],
                     kThickColors[3]};
  m.edges = {{2, 1}, {1, -1}, {1, 1}, {2, -1}};
  return m;
}

Marking thin_marking() {
  Marking m;
  m.vertex_colors = {kThinColors[0], kThinColors[1], kThinColors[2],
                     kThinColors[3]};
  m.edges = {{1, 1}, {1, -1}, {2, -1}, {2, 1}};
  return m;
}

// ------------------------------------------------------- marking transport

// Polygon::transformed reverses the stored cycle under reflections, so the
// realized slots of a reflected placement walk the prototype backwards.
size_t proto_vertex_slot(size_t rv, size_t n, bool reflected) {
  return reflected ? (n - 1 - rv % n) : rv % n;
}

struct ProtoEdge {
  size_t slot;
  bool flipped;
};

ProtoEdge proto_edge_slot(size_t re, size_t n, bool reflected) {
  if (!reflected) return {re % n, false};
  return {(2 * n - 2 - re % n) % n, true};
}

EdgeDecoration decoration_of(const MarkedPrototile<Exact>& p, bool reflected,
                             size_t re) {
  if (!p.marking) return {};
  auto [slot, flipped] = proto_edge_slot(re, p.polygon.size(), reflected);
  EdgeDecoration d = p.marking->edges[slot];
  if (flipped) d.direction = -d.direction;
  return d;
}

std::string color_of(const MarkedPrototile<Exact>& p, bool reflected,
                     size_t rv) {
  if (!p.marking) return "";
  return p.marking->vertex_colors[proto_vertex_slot(rv, p.polygon.size(),
                                                    reflected)];
}

void require_marking_sizes(const Tiling<Exact>& t) {
  for (const auto& [name, proto] : t.prototiles) {
    if (!proto.marking) continue;
    if (proto.marking->vertex_colors.size() != proto.polygon.size() ||
        proto.marking->edges.size() != proto.polygon.size())
      throw std::invalid_argument("marking of '" + name +
                                  "' does not fit its polygon");
  }
}

// ---------------------------------------------------------------- exact keys

std::string num_key(const Exact& v) { return v.str(); }

std::string pt_key(const V& p) {
  return num_key(p.x) + "," + num_key(p.y);
}

std::string edge_key(const std::string& a, const std::string& b) {
  return a < b ? a + ";" + b : b + ";" + a;
}

std::string pose_key(const Iso& g) {
  std::string s = g.reflected ? "r|" : "d|";
  s += num_key(g.rot_c) + "|" + num_key(g.rot_s) + "|" + num_key(g.tx) + "|" +
       num_key(g.ty);
  return s;
}

// --------------------------------------------------------------- prototiles

const std::map<std::string, MarkedPrototile<Exact>>& rhombus_set() {
  static const std::map<std::string, MarkedPrototile<Exact>> set = [] {
    const Shared& k = sh();
    std::map<std::string, MarkedPrototile<Exact>> m;
    m.emplace("thick",
              MarkedPrototile<Exact>{"thick", k.thick, thick_marking()});
    m.emplace("thin", MarkedPrototile<Exact>{"thin", k.thin, thin_marking()});
    return m;
  }();
  return set;
}

bool same_marking(const std::optional<Marking>& a,
                  const std::optional<Marking>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  if (a->vertex_colors != b->vertex_colors) return false;
  if (a->edges.size() != b->edges.size()) return false;
  for (size_t i = 0; i < a->edges.size(); ++i) {
    if (a->edges[i].arrow_count != b->edges[i].arrow_count) return false;
    if (a->edges[i].arrow_count > 0 &&
        a->edges[i].direction != b->edges[i].direction)
      return false;
  }
  return true;
}

void require_rhombus_patch(const Tiling<Exact>& t) {
  const auto& canon = rhombus_set();
  if (t.prototiles.empty())
    throw NotARhombusPatch("patch declares no prototiles");
  for (const auto& [name, proto] : t.prototiles) {
    auto it = canon.find(name);
    if (it == canon.end())
      throw NotARhombusPatch("prototile '" + name +
                             "' is not a Penrose rhombus");
    const auto& ref = it->second;
    bool same = proto.polygon.size() == ref.polygon.size();
    for (size_t i = 0; same && i < ref.polygon.size(); ++i)
      same = proto.polygon.vertex(i) == ref.polygon.vertex(i);
    if (!same || !same_marking(proto.marking, ref.marking))
      throw NotARhombusPatch("prototile '" + name +
                             "' differs from the Penrose rhombus of that name");
  }
}

// ------------------------------------------------------------- substitution

// One placed triangle half.  obtuse = thick half, acute = thin half.
struct HalfTile {
  bool obtuse;
  Iso g;
};

// Child placement = parent pose, then the child similarity, then a global
// magnification by phi restoring unit scale.  u is the child rotation times
// phi (a unit complex), d the child origin in parent coordinates.
struct ChildRule {
  bool obtuse;
  V u;
  V d;
};

const std::array<ChildRule, 3>& obtuse_children() {
  static const std::array<ChildRule, 3> r = [] {
    const Shared& k = sh();
    return std::array<ChildRule, 3>{{
        {true, {Exact(1), Exact(0)}, {Exact(0), Exact(0)}},
        {false, {-k.c36, -k.s36}, {k.c36, k.s36}},
        {true, {-k.c36, k.s36}, {k.phi, Exact(0)}},
    }};
  }();
  return r;
}

const std::array<ChildRule, 2>& acute_children() {
  static const std::array<ChildRule, 2> r = [] {
    const Shared& k = sh();
    Exact q = k.inv_phi * k.inv_phi;
    return std::array<ChildRule, 2>{{
        {true, {-k.c72, k.s72}, {k.inv_phi, Exact(0)}},
        {false, {-k.c72, -k.s72}, {q * k.c72, q * k.s72}},
    }};
  }();
  return r;
}

Iso child_pose(const Iso& g, const ChildRule& r, const Exact& phi) {
  Exact ux = r.u.x, uy = r.u.y, dx = r.d.x, dy = r.d.y;
  if (g.reflected) {
    uy = -uy;
    dy = -dy;
  }
  Iso out;
  out.reflected = g.reflected;
  out.rot_c = g.rot_c * ux - g.rot_s * uy;
  out.rot_s = g.rot_s * ux + g.rot_c * uy;
  out.tx = phi * (g.rot_c * dx - g.rot_s * dy + g.tx);
  out.ty = phi * (g.rot_s * dx + g.rot_c * dy + g.ty);
  return out;
}

}  // namespace

std::map<std::string, MarkedPrototile<Exact>> penrose_rhombus_prototiles() {
  return rhombus_set();
}

std::map<std::string, MarkedPrototile<Exact>> oriented_rhombus_prototiles() {
  const Shared& k = sh();
  std::map<std::string, MarkedPrototile<Exact>> m;
  // arrows only, one per edge, opposite edges pointing opposite ways along
  // the boundary walk; that makes plain lattice translates legal, which is
  // exactly what the colored set above forbids
  Marking across;
  across.vertex_colors = {"", "", "", ""};
  across.edges = {{1, 1}, {1, 1}, {1, -1}, {1, -1}};
  m.emplace("thick", MarkedPrototile<Exact>{"thick", k.thick, across});
  m.emplace("thin", MarkedPrototile<Exact>{"thin", k.thin, across});
  return m;
}

std::map<std::string, MarkedPrototile<Exact>> kite_dart_prototiles() {
  const Shared& k = sh();
  V nose{Exact(0), Exact(0)};
  V wing_lo{k.phi * k.c36, -(k.phi * k.s36)};
  V wing_hi{k.phi * k.c36, k.phi * k.s36};
  Polygon<Exact> kite =
      make_polygon<Exact>({nose, wing_lo, V{k.phi, Exact(0)}, wing_hi});
  Polygon<Exact> dart =
      make_simple_polygon<Exact>({nose, wing_lo, V{Exact(1), Exact(0)}, wing_hi});
  Marking km, dm;
  km.vertex_colors = {kKiteColors[0], kKiteColors[1], kKiteColors[2],
                      kKiteColors[3]};
  km.edges.assign(4, EdgeDecoration{});
  dm.vertex_colors = {kDartColors[0], kDartColors[1], kDartColors[2],
                      kDartColors[3]};
  dm.edges.assign(4, EdgeDecoration{});
  std::map<std::string, MarkedPrototile<Exact>> m;
  m.emplace("kite", MarkedPrototile<Exact>{"kite", kite, km});
  m.emplace("dart", MarkedPrototile<Exact>{"dart", dart, dm});
  return m;
}

// ----------------------------------------------------------- check_matching

std::vector<MatchingIssue> check_matching(const Tiling<Exact>& t) {
  require_marking_sizes(t);
  std::vector<MatchingIssue> out;
  size_t n = t.tiles.size();
  std::vector<Polygon<Exact>> polys;
  polys.reserve(n);
  std::vector<std::vector<std::string>> vkeys(n);
  for (size_t i = 0; i < n; ++i) {
    polys.push_back(t.realize(i));
    vkeys[i].reserve(polys[i].size());
    for (const auto& p : polys[i].verts()) vkeys[i].push_back(pt_key(p));
  }

  // corners meeting at a point must carry one color; "" imposes nothing
  std::map<std::string, std::vector<std::pair<size_t, size_t>>> at_vertex;
  for (size_t i = 0; i < n; ++i)
    for (size_t v = 0; v < vkeys[i].size(); ++v)
      at_vertex[vkeys[i][v]].push_back({i, v});
  for (const auto& [key, corners] : at_vertex) {
    (void)key;
    if (corners.size() < 2) continue;
    std::string ruling;
    std::pair<size_t, size_t> ruler{0, 0};
    for (const auto& [ti, tv] : corners) {
      std::string c = color_of(t.proto_of(ti), t.tiles[ti].transform.reflected,
                               tv);
      if (c.empty()) continue;
      if (ruling.empty()) {
        ruling = c;
        ruler = {ti, tv};
        continue;
      }
      if (c != ruling)
        out.push_back({MatchingIssue::Kind::VertexColor, ruler.first, ti,
                       ruler.second, tv,
                       "colors " + ruling + " and " + c + " meet"});
    }
  }

  // fully shared edges: equal arrow counts, arrows agreeing in the plane
  std::map<std::string, std::vector<std::pair<size_t, size_t>>> at_edge;
  for (size_t i = 0; i < n; ++i) {
    size_t m = polys[i].size();
    for (size_t e = 0; e < m; ++e)
      at_edge[edge_key(vkeys[i][e], vkeys[i][(e + 1) % m])].push_back({i, e});
  }
  for (const auto& [key, sides] : at_edge) {
    (void)key;
    for (size_t a = 0; a < sides.size(); ++a)
      for (size_t b = a + 1; b < sides.size(); ++b) {
        auto [ti, te] = sides[a];
        auto [tj, tf] = sides[b];
        EdgeDecoration da =
            decoration_of(t.proto_of(ti), t.tiles[ti].transform.reflected, te);
        EdgeDecoration db =
            decoration_of(t.proto_of(tj), t.tiles[tj].transform.reflected, tf);
        bool same_dir = vkeys[ti][te] == vkeys[tj][tf];
        int db_in_a = same_dir ? db.direction : -db.direction;
        if (da.arrow_count != db.arrow_count)
          out.push_back({MatchingIssue::Kind::EdgeDecoration, ti, tj, te, tf,
                         "arrow counts differ"});
        else if (da.arrow_count > 0 && da.direction != db_in_a)
          out.push_back({MatchingIssue::Kind::EdgeDecoration, ti, tj, te, tf,
                         "arrows oppose"});
      }
  }

  // corners in the middle of someone else's edge break edge-to-edge-ness
  double cell = 0;
  for (const auto& [name, proto] : t.prototiles) {
    (void)name;
    for (size_t e = 0; e < proto.polygon.size(); ++e)
      cell = std::max(cell,
                      std::sqrt(as_double(proto.polygon.edge_len_sq(e))));
  }
  if (cell == 0) cell = 1;
  auto bin_of = [&](double x, double y) {
    long long bx = static_cast<long long>(std::floor(x / cell));
    long long by = static_cast<long long>(std::floor(y / cell));
    return std::to_string(bx) + ":" + std::to_string(by);
  };
  std::unordered_map<std::string, std::vector<std::pair<size_t, size_t>>> bins;
  for (size_t i = 0; i < n; ++i) {
    size_t m = polys[i].size();
    for (size_t e = 0; e < m; ++e) {
      Vec2<double> a = as_double(polys[i].vertex(e));
      Vec2<double> b = as_double(polys[i].vertex(e + 1));
      long long x0 = static_cast<long long>(
          std::floor((std::min(a.x, b.x) - 1e-9) / cell));
      long long x1 = static_cast<long long>(
          std::floor((std::max(a.x, b.x) + 1e-9) / cell));
      long long y0 = static_cast<long long>(
          std::floor((std::min(a.y, b.y) - 1e-9) / cell));
      long long y1 = static_cast<long long>(
          std::floor((std::max(a.y, b.y) + 1e-9) / cell));
      for (long long x = x0; x <= x1; ++x)
        for (long long y = y0; y <= y1; ++y)
          bins[std::to_string(x) + ":" + std::to_string(y)].push_back({i, e});
    }
  }
  for (const auto& [key, corners] : at_vertex) {
    (void)key;
    auto [ti, tv] = corners.front();
    V p = polys[ti].vertex(tv);
    Vec2<double> pd = as_double(p);
    auto it = bins.find(bin_of(pd.x, pd.y));
    if (it == bins.end()) continue;
    for (const auto& [tj, tf] : it->second) {
      V a = polys[tj].vertex(tf);
      V b = polys[tj].vertex(tf + 1);
      if (on_segment_interior(a, b, p))
        out.push_back({MatchingIssue::Kind::NotEdgeToEdge, ti, tj, tv, tf,
                       "corner splits an edge"});
    }
  }
  return out;
}

// --------------------------------------------------------------- substitute

Tiling<Exact> substitute(const Tiling<Exact>& patch, int k) {
  if (k < 0) throw std::invalid_argument("substitute needs k >= 0");
  require_rhombus_patch(patch);
  if (k == 0) return patch;
  const Shared& s = sh();

  std::vector<HalfTile> halves;
  halves.reserve(patch.tiles.size() * 2);
  for (const auto& tile : patch.tiles) {
    bool obtuse = tile.prototile == "thick";
    const Iso& half = obtuse ? s.half_thick : s.half_thin;
    halves.push_back({obtuse, tile.transform * half});
    halves.push_back({obtuse, tile.transform * half * s.sigma});
  }

  for (int round = 0; round < k; ++round) {
    std::vector<HalfTile> next;
    next.reserve(halves.size() * 3);
    for (const auto& h : halves) {
      if (h.obtuse)
        for (const auto& r : obtuse_children())
          next.push_back({r.obtuse, child_pose(h.g, r, s.phi)});
      else
        for (const auto& r : acute_children())
          next.push_back({r.obtuse, child_pose(h.g, r, s.phi)});
    }
    halves = std::move(next);
  }

  // Two halves of one rhombus land on the same pose after folding reflected
  // poses through the cut-diagonal mirror, so a plain key dedup remerges
  // them.  A half whose twin lies across the patch boundary keys a pose of
  // its own and thereby completes its rhombus outward.
  Tiling<Exact> out;
  out.prototiles = rhombus_set();
  std::unordered_set<std::string> seen;
  for (const auto& h : halves) {
    Iso full = h.g * (h.obtuse ? s.unhalf_thick : s.unhalf_thin);
    if (full.reflected) full = full * (h.obtuse ? s.mirror_thick : s.mirror_thin);
    std::string key = (h.obtuse ? "T|" : "t|") + pose_key(full);
    if (seen.insert(key).second)
      out.tiles.push_back({h.obtuse ? "thick" : "thin", full});
  }
  double mag = std::pow(as_double(s.phi), k);
  out.window = {patch.window.xmin * mag, patch.window.ymin * mag,
                patch.window.xmax * mag, patch.window.ymax * mag};
  return out;
}

// ------------------------------------------------------------ corona search

namespace {

bool marking_fixed_by_shift(const MarkedPrototile<Exact>& p, size_t off) {
  if (!p.marking) return true;
  size_t n = p.polygon.size();
  for (size_t i = 0; i < n; ++i) {
    if (p.marking->vertex_colors[(i + off) % n] != p.marking->vertex_colors[i])
      return false;
    const auto& a = p.marking->edges[(i + off) % n];
    const auto& b = p.marking->edges[i];
    if (a.arrow_count != b.arrow_count) return false;
    if (a.arrow_count > 0 && a.direction != b.direction) return false;
  }
  return true;
}

bool marking_fixed_by_flip(const MarkedPrototile<Exact>& p, size_t off) {
  // vertex i lands on off - i, edge i on edge off - i - 1 walked backwards
  if (!p.marking) return true;
  size_t n = p.polygon.size();
  for (size_t i = 0; i < n; ++i) {
    if (p.marking->vertex_colors[(off + n - i % n) % n] !=
        p.marking->vertex_colors[i])
      return false;
    const auto& a = p.marking->edges[(off + 2 * n - i - 1) % n];
    const auto& b = p.marking->edges[i];
    if (a.arrow_count != b.arrow_count) return false;
    if (a.arrow_count > 0 && a.direction != -b.direction) return false;
  }
  return true;
}

std::vector<Iso> marked_symmetries(const MarkedPrototile<Exact>& p) {
  const auto& v = p.polygon.verts();
  size_t n = v.size();
  std::vector<Iso> out;
  for (size_t off = 0; off < n; ++off) {
    if (!marking_fixed_by_shift(p, off)) continue;
    if (auto g = detail::cycle_map(v, v, off)) out.push_back(*g);
  }
  std::vector<V> mirrored;
  mirrored.reserve(n);
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    mirrored.push_back({it->x, -it->y});
  Iso flip{Exact(1), Exact(0), Exact(0), Exact(0), true};
  for (size_t off = 0; off < n; ++off) {
    if (auto g = detail::cycle_map(mirrored, v, off)) {
      Iso s = *g * flip;  // maps vertex i to vertex off + n - 1 - i
      if (marking_fixed_by_flip(p, (off + n - 1) % n)) out.push_back(s);
    }
  }
  return out;
}

struct Searcher {
  const MarkedPrototile<Exact>& p;
  int depth;
  long long budget;
  long long nodes = 0;
  size_t nv;
  std::vector<Iso> sym;
  double scale = 1;

  std::vector<Iso> tiles;
  std::vector<int> layer;
  std::vector<Polygon<Exact>> polys;
  std::vector<std::vector<Vec2<double>>> dverts;
  std::vector<Rect> boxes;
  std::vector<std::vector<std::string>> keys;
  std::vector<std::vector<std::string>> ekeys;
  std::unordered_map<std::string, std::vector<std::pair<int, int>>> edge_at;
  std::unordered_map<std::string, std::vector<std::pair<int, int>>> vert_at;
  // per vertex key, the edges incident there, in placement order
  std::unordered_map<std::string, std::vector<std::pair<int, int>>> vert_edges;

  int best_layers = 0;
  std::vector<Iso> best_tiles;
  std::vector<int> best_layer;

  explicit Searcher(const MarkedPrototile<Exact>& proto, int d, long long b)
      : p(proto), depth(d), budget(b), nv(proto.polygon.size()),
        sym(marked_symmetries(proto)) {}

  void place(const Iso& g, int lay) {
    int idx = static_cast<int>(tiles.size());
    tiles.push_back(g);
    layer.push_back(lay);
    polys.push_back(p.polygon.transformed(g));
    const auto& vs = polys.back().verts();
    std::vector<Vec2<double>> dv;
    std::vector<std::string> ks;
    Rect box = polys.back().bbox();
    for (const auto& q : vs) {
      dv.push_back(as_double(q));
      ks.push_back(pt_key(q));
      scale = std::max({scale, std::abs(dv.back().x), std::abs(dv.back().y)});
    }
    dverts.push_back(std::move(dv));
    boxes.push_back(box);
    std::vector<std::string> es;
    for (size_t e = 0; e < nv; ++e) {
      std::string ek = edge_key(ks[e], ks[(e + 1) % nv]);
      edge_at[ek].push_back({idx, static_cast<int>(e)});
      vert_edges[ks[e]].push_back({idx, static_cast<int>(e)});
      vert_edges[ks[(e + 1) % nv]].push_back({idx, static_cast<int>(e)});
      es.push_back(std::move(ek));
    }
    ekeys.push_back(std::move(es));
    for (size_t vi = 0; vi < nv; ++vi)
      vert_at[ks[vi]].push_back({idx, static_cast<int>(vi)});
    keys.push_back(std::move(ks));
  }

  void unplace() {
    int idx = static_cast<int>(tiles.size()) - 1;
    for (size_t vi = 0; vi < nv; ++vi) {
      auto& lst = vert_at[keys[idx][vi]];
      lst.pop_back();
      if (lst.empty()) vert_at.erase(keys[idx][vi]);
    }
    for (size_t e = 0; e < nv; ++e) {
      auto& lst = edge_at[ekeys[idx][e]];
      lst.pop_back();
      if (lst.empty()) edge_at.erase(ekeys[idx][e]);
      for (const std::string& vk : {keys[idx][e], keys[idx][(e + 1) % nv]}) {
        auto& ve = vert_edges[vk];
        ve.pop_back();
        if (ve.empty()) vert_edges.erase(vk);
      }
    }
    tiles.pop_back();
    layer.pop_back();
    polys.pop_back();
    dverts.pop_back();
    boxes.pop_back();
    keys.pop_back();
    ekeys.pop_back();
  }

  bool edge_shared(int ti, int e) const {
    return edge_at.at(ekeys[ti][e]).size() >= 2;
  }

  bool sealed(int ti) const {
    for (size_t e = 0; e < nv; ++e)
      if (!edge_shared(ti, static_cast<int>(e))) return false;
    for (size_t vi = 0; vi < nv; ++vi) {
      auto it = vert_edges.find(keys[ti][vi]);
      for (const auto& [tj, ej] : it->second)
        if (!edge_shared(tj, ej)) return false;
    }
    return true;
  }

  int layers_done() const {
    int done = depth + 1;
    for (size_t i = 0; i < tiles.size(); ++i)
      if (layer[i] < done && !sealed(static_cast<int>(i)))
        done = layer[i];
    return done;
  }

  // first open edge bounding the first defect of the lowest open layer
  std::pair<int, int> pick_target(int done) const {
    for (size_t i = 0; i < tiles.size(); ++i) {
      if (layer[i] != done || sealed(static_cast<int>(i))) continue;
      for (size_t e = 0; e < nv; ++e)
        if (!edge_shared(static_cast<int>(i), static_cast<int>(e)))
          return {static_cast<int>(i), static_cast<int>(e)};
      for (size_t vi = 0; vi < nv; ++vi) {
        for (const auto& [tj, ej] : vert_edges.at(keys[i][vi]))
          if (!edge_shared(tj, ej)) return {tj, ej};
      }
    }
    throw std::logic_error("no open feature in an incomplete corona");
  }

  std::vector<Iso> candidates(int ti, int e) const {
    V w0 = polys[ti].vertex(e);
    V w1 = polys[ti].vertex(e + 1);
    Exact want = length_sq(V{w1.x - w0.x, w1.y - w0.y});
    std::vector<Iso> out;
    std::unordered_set<std::string> seen;
    auto push = [&](const Iso& g) {
      std::string best;
      for (const auto& s : sym) {
        std::string k = pose_key(g * s);
        if (best.empty() || k < best) best = std::move(k);
      }
      if (seen.insert(best).second) out.push_back(g);
    };
    for (size_t f = 0; f < nv; ++f) {
      if (!(p.polygon.edge_len_sq(f) == want)) continue;
      V p0 = p.polygon.vertex(f);
      V p1 = p.polygon.vertex(f + 1);
      push(detail::segment_map(p0, p1, w1, w0, false));
      push(detail::segment_map(p0, p1, w0, w1, true));
    }
    return out;
  }

  // conservative double-precision screens; exact predicates settle the calls
  // that land within eps of a tie
  bool overlaps(const Polygon<Exact>& q, const std::vector<Vec2<double>>& dq,
                const Rect& bq, int j) const {
    double eps = 1e-9 * scale;
    if (!bq.intersects(boxes[j], eps)) return false;
    if (q.convex() && polys[j].convex()) {
      int verdict = 1;  // 1 = overlap unless an axis separates
      auto axes = [&](const std::vector<Vec2<double>>& a,
                      const std::vector<Vec2<double>>& b) {
        size_t m = a.size();
        for (size_t i = 0; i < m && verdict != 0; ++i) {
          Vec2<double> e{a[(i + 1) % m].x - a[i].x, a[(i + 1) % m].y - a[i].y};
          double lo = 1e300;
          for (const auto& v : b)
            lo = std::min(lo, -e.y * (v.x - a[i].x) + e.x * (v.y - a[i].y));
          double unit = std::hypot(e.x, e.y);
          if (lo > eps * unit) {
            verdict = -1;  // clearly separated
            return;
          }
          if (lo > -eps * unit) verdict = 0;  // too close to call
        }
      };
      axes(dq, dverts[j]);
      if (verdict == -1) return false;
      if (verdict == 1) axes(dverts[j], dq);
      if (verdict == -1) return false;
      if (verdict == 1) return true;
    }
    return interiors_intersect(q, polys[j]);
  }

  bool splits_edge(const V& v, const Vec2<double>& vd, int j) const {
    double eps = 1e-9 * scale;
    for (size_t e = 0; e < nv; ++e) {
      const Vec2<double>& a = dverts[j][e];
      const Vec2<double>& b = dverts[j][(e + 1) % nv];
      double ex = b.x - a.x, ey = b.y - a.y;
      double len = std::hypot(ex, ey);
      double cr = ex * (vd.y - a.y) - ey * (vd.x - a.x);
      if (std::abs(cr) > eps * len) continue;
      double t = ex * (vd.x - a.x) + ey * (vd.y - a.y);
      if (t < -eps * len || t > len * len + eps * len) continue;
      if (on_segment_interior(polys[j].vertex(e), polys[j].vertex(e + 1), v))
        return true;
    }
    return false;
  }

  bool legal(const Iso& g) {
    Polygon<Exact> q = p.polygon.transformed(g);
    const auto& vs = q.verts();
    std::vector<std::string> ks;
    std::vector<Vec2<double>> dq;
    for (const auto& v : vs) {
      ks.push_back(pt_key(v));
      dq.push_back(as_double(v));
    }
    // marking screens first, they are cheap hash lookups
    for (size_t e = 0; e < nv; ++e) {
      auto it = edge_at.find(edge_key(ks[e], ks[(e + 1) % nv]));
      if (it == edge_at.end()) continue;
      if (it->second.size() >= 2) return false;  // edge already closed
      auto [tj, ej] = it->second.front();
      EdgeDecoration mine = decoration_of(p, g.reflected, e);
      EdgeDecoration theirs =
          decoration_of(p, tiles[tj].reflected, static_cast<size_t>(ej));
      if (mine.arrow_count != theirs.arrow_count) return false;
      bool same_dir = ks[e] == keys[tj][ej];
      int theirs_here = same_dir ? theirs.direction : -theirs.direction;
      if (mine.arrow_count > 0 && mine.direction != theirs_here) return false;
    }
    for (size_t vi = 0; vi < nv; ++vi) {
      std::string mine = color_of(p, g.reflected, vi);
      if (mine.empty()) continue;
      auto it = vert_at.find(ks[vi]);
      if (it == vert_at.end()) continue;
      for (const auto& [tj, vj] : it->second) {
        std::string theirs =
            color_of(p, tiles[tj].reflected, static_cast<size_t>(vj));
        if (!theirs.empty() && theirs != mine) return false;
      }
    }
    // geometry: no interior overlap, no corner splitting an edge
    Rect bq = q.bbox();
    double eps = 1e-9 * scale;
    for (size_t j = 0; j < tiles.size(); ++j) {
      if (!bq.intersects(boxes[j], eps)) continue;
      if (overlaps(q, dq, bq, static_cast<int>(j))) return false;
      for (size_t vi = 0; vi < nv; ++vi)
        if (splits_edge(vs[vi], dq[vi], static_cast<int>(j))) return false;
      for (size_t vj = 0; vj < nv; ++vj) {
        const V& w = polys[j].vertex(vj);
        const Vec2<double>& wd = dverts[j][vj];
        for (size_t e = 0; e < nv; ++e) {
          double ex = dq[(e + 1) % nv].x - dq[e].x;
          double ey = dq[(e + 1) % nv].y - dq[e].y;
          double len = std::hypot(ex, ey);
          double c2 = ex * (wd.y - dq[e].y) - ey * (wd.x - dq[e].x);
          if (std::abs(c2) > eps * len) continue;
          if (on_segment_interior(vs[e], vs[(e + 1) % nv], w)) return false;
        }
      }
    }
    return true;
  }

  void snapshot(int done) {
    if (done < best_layers) return;
    if (done == best_layers && !best_tiles.empty() &&
        tiles.size() <= best_tiles.size())
      return;
    best_layers = done;
    best_tiles = tiles;
    best_layer = layer;
  }

  bool dfs() {
    int done = layers_done();
    snapshot(done);
    if (done >= depth) return true;
    auto [ti, e] = pick_target(done);
    for (const Iso& g : candidates(ti, e)) {
      if (++nodes > budget)
        throw SearchBudgetExceeded("corona search exceeded " +
                                   std::to_string(budget) + " placements");
      if (!legal(g)) continue;
      place(g, done + 1);
      if (dfs()) return true;
      unplace();
    }
    return false;
  }
};

}  // namespace

SearchOutcome corona_search(const MarkedPrototile<Exact>& p, int depth,
                            long long node_budget) {
  if (depth < 1) throw std::invalid_argument("corona depth must be >= 1");
  if (p.marking &&
      (p.marking->vertex_colors.size() != p.polygon.size() ||
       p.marking->edges.size() != p.polygon.size()))
    throw std::invalid_argument("marking does not fit the polygon");
  Searcher s(p, depth, node_budget);
  s.place(Iso::identity(), 0);
  SearchOutcome out;
  out.completed = s.dfs();
  out.nodes = s.nodes;
  const auto& ts = out.completed ? s.tiles : s.best_tiles;
  const auto& ls = out.completed ? s.layer : s.best_layer;
  out.layers = out.completed ? depth : s.best_layers;
  out.configuration.prototiles.emplace(p.name, p);
  for (const auto& g : ts) out.configuration.tiles.push_back({p.name, g});
  out.layer_of = ls;
  return out;
}

// ------------------------------------------------- the periodic marked thin

Tiling<Exact> oriented_rhombus_periodic(int m, int n) {
  const Shared& k = sh();
  auto protos = oriented_rhombus_prototiles();
  FundamentalRegion<Exact> r;
  r.prototiles.emplace("thin", protos.at("thin"));
  r.tiles.push_back({"thin", Iso::identity()});
  r.v1 = {Exact(1), Exact(0)};
  r.v2 = {k.c36, k.s36};
  return generate_patch(r, m, n);
}

// ------------------------------------------------------------ recomposition

AmmannMarking ammann_marking(const Exact& split) {
  const Shared& k = sh();
  AmmannMarking m;
  m.A = k.A;
  m.B = k.B;
  m.C = k.C;
  m.D = k.D;
  m.E = k.E;
  m.F = k.F;
  m.G = k.G;
  m.H = k.H;
  Exact half = Exact::frac(1, 2);
  V mbc{half * (m.B.x + m.C.x), half * (m.B.y + m.C.y)};
  V mcd{half * (m.C.x + m.D.x), half * (m.C.y + m.D.y)};
  m.J = {mbc.x + split * (mcd.x - mbc.x), mbc.y + split * (mcd.y - mbc.y)};
  Iso mu1 = detail::segment_map(m.B, m.C, m.H, m.E, false);
  Iso mu2 = detail::segment_map(m.C, m.D, m.F, m.G, false);
  m.K = mu1(m.J);
  m.L = mu2(m.J);
  return m;
}

namespace {

Exact dist_sq(const V& a, const V& b) {
  return length_sq(V{a.x - b.x, a.y - b.y});
}

void require_generic(const AmmannMarking& m) {
  const Shared& k = sh();
  const V pts[8] = {m.A, m.B, m.C, m.D, m.E, m.F, m.G, m.H};
  const V ref[8] = {k.A, k.B, k.C, k.D, k.E, k.F, k.G, k.H};
  for (int i = 0; i < 8; ++i)
    if (!(pts[i] == ref[i]))
      throw std::invalid_argument("marking rhombi differ from the prototypes");
  if (!(dist_sq(m.H, m.K) == dist_sq(m.B, m.J)) ||
      !(dist_sq(m.E, m.K) == dist_sq(m.C, m.J)) ||
      !(dist_sq(m.F, m.L) == dist_sq(m.C, m.J)) ||
      !(dist_sq(m.G, m.L) == dist_sq(m.D, m.J)))
    throw std::invalid_argument("marking breaks HK=BJ, EK=CJ=FL, GL=DJ");
  // J interior to the thick rhombus, K and L interior to the thin one
  auto inside = [](const Polygon<Exact>& poly, const V& q) {
    for (size_t i = 0; i < poly.size(); ++i)
      if (orientation(poly.vertex(i), poly.vertex(i + 1), q) <= 0) return false;
    return true;
  };
  if (!inside(sh().thick, m.J) || !inside(sh().thin, m.K) ||
      !inside(sh().thin, m.L))
    throw std::invalid_argument("cut points must lie inside their rhombi");
  Exact dj = dist_sq(m.D, m.J), cj = dist_sq(m.C, m.J),
        bj = dist_sq(m.B, m.J), kl = dist_sq(m.K, m.L);
  if (dj == cj || dj == bj || dj == kl || cj == bj || cj == kl || bj == kl)
    throw DegenerateJ("DJ, CJ, BJ and KL must be pairwise distinct");
}

// One cut piece of one placed rhombus.  Dissolving edges are the stretches
// of former rhombus boundary; the piece merges across them.
struct Piece {
  std::vector<V> verts;
  std::vector<std::pair<size_t, size_t>> dissolve;  // vertex index pairs
};

std::vector<Piece> piece_templates(const AmmannMarking& m, bool obtuse) {
  if (obtuse)
    return {
        {{m.A, m.B, m.J, m.D}, {{0, 1}, {3, 0}}},
        {{m.B, m.C, m.J}, {{0, 1}}},
        {{m.C, m.D, m.J}, {{0, 1}}},
    };
  return {
      {{m.E, m.F, m.L, m.K}, {{0, 1}}},
      {{m.F, m.G, m.L}, {{0, 1}}},
      {{m.G, m.H, m.K, m.L}, {{0, 1}}},
      {{m.H, m.E, m.K}, {{0, 1}}},
  };
}

struct Merged {
  std::vector<V> cycle;
  bool complete;
  size_t first_piece;
};

struct Recomposition {
  std::vector<Merged> tiles;
};

Recomposition cut_and_merge(const Tiling<Exact>& t, const AmmannMarking& m) {
  struct Placed {
    std::vector<V> verts;
    std::vector<std::string> keys;
    std::vector<std::pair<size_t, size_t>> dissolve;
  };
  std::vector<Placed> pieces;
  for (const auto& tile : t.tiles) {
    bool obtuse = tile.prototile == "thick";
    for (const auto& tpl : piece_templates(m, obtuse)) {
      Placed pl;
      size_t n = tpl.verts.size();
      for (const auto& v : tpl.verts) pl.verts.push_back(tile.transform(v));
      if (tile.transform.reflected) {
        std::reverse(pl.verts.begin(), pl.verts.end());
        for (auto [a, b] : tpl.dissolve)
          pl.dissolve.push_back({n - 1 - b, n - 1 - a});
      } else {
        pl.dissolve = tpl.dissolve;
      }
      for (const auto& v : pl.verts) pl.keys.push_back(pt_key(v));
      pieces.push_back(std::move(pl));
    }
  }

  // union pieces across dissolved edges; a dissolved side without a partner
  // marks its component as a boundary fragment
  std::vector<size_t> parent(pieces.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, std::vector<size_t>> by_seam;
  for (size_t i = 0; i < pieces.size(); ++i)
    for (auto [a, b] : pieces[i].dissolve)
      by_seam[edge_key(pieces[i].keys[a], pieces[i].keys[b])].push_back(i);
  std::vector<bool> open(pieces.size(), false);
  for (const auto& [key, owners] : by_seam) {
    (void)key;
    if (owners.size() == 2)
      parent[find(owners[0])] = find(owners[1]);
    else
      for (size_t i : owners) open[i] = true;
  }

  std::map<size_t, std::vector<size_t>> comps;
  for (size_t i = 0; i < pieces.size(); ++i) comps[find(i)].push_back(i);

  Recomposition out;
  for (const auto& [root, members] : comps) {
    (void)root;
    // directed boundary edges of all members; seams appear in both
    // directions and cancel
    std::map<std::pair<std::string, std::string>, int> net;
    std::map<std::string, V> coord;
    for (size_t i : members) {
      size_t n = pieces[i].verts.size();
      for (size_t e = 0; e < n; ++e) {
        const std::string& a = pieces[i].keys[e];
        const std::string& b = pieces[i].keys[(e + 1) % n];
        coord.emplace(a, pieces[i].verts[e]);
        coord.emplace(b, pieces[i].verts[(e + 1) % n]);
        auto rev = net.find({b, a});
        if (rev != net.end() && rev->second > 0)
          --rev->second;
        else
          ++net[{a, b}];
      }
    }
    std::map<std::string, std::vector<std::string>> succ;
    size_t total = 0;
    for (const auto& [dir, cnt] : net)
      for (int c = 0; c < cnt; ++c) {
        succ[dir.first].push_back(dir.second);
        ++total;
      }
    if (total == 0) continue;
    std::string start = succ.begin()->first;
    std::vector<V> cycle;
    std::string cur = start;
    for (size_t step = 0; step <= total; ++step) {
      cycle.push_back(coord.at(cur));
      auto& nxt = succ[cur];
      if (nxt.empty())
        throw std::logic_error("merged boundary is not a single cycle");
      cur = nxt.back();
      nxt.pop_back();
      if (cur == start) break;
    }
    if (cycle.size() < 3 || cur != start)
      throw std::logic_error("merged boundary is not a single cycle");
    // drop straight-angle vertices left over from the seams
    std::vector<V> trimmed;
    size_t nc = cycle.size();
    for (size_t i = 0; i < nc; ++i) {
      const V& prev = cycle[(i + nc - 1) % nc];
      const V& next = cycle[(i + 1) % nc];
      if (orientation(prev, cycle[i], next) != 0) trimmed.push_back(cycle[i]);
    }
    bool complete = true;
    for (size_t i : members) complete = complete && !open[i];
    out.tiles.push_back({std::move(trimmed), complete, members.front()});
  }
  return out;
}

Polygon<Exact> rebase(const std::vector<V>& cycle) {
  V o = cycle.front();
  std::vector<V> shifted;
  shifted.reserve(cycle.size());
  for (const auto& v : cycle) shifted.push_back({v.x - o.x, v.y - o.y});
  return make_simple_polygon<Exact>(std::move(shifted));
}

std::string marking_key(const AmmannMarking& m) {
  return pt_key(m.J) + "|" + pt_key(m.K) + "|" + pt_key(m.L);
}

// the three complete shapes, derived once per marking from a seed patch big
// enough to contain interior copies of all of them
const std::vector<Polygon<Exact>>& reference_shapes(const AmmannMarking& m) {
  static std::map<std::string, std::vector<Polygon<Exact>>> cache;
  auto it = cache.find(marking_key(m));
  if (it != cache.end()) return it->second;

  Tiling<Exact> seed;
  seed.prototiles = rhombus_set();
  seed.tiles.push_back({"thick", Iso::identity()});
  Tiling<Exact> patch = substitute(seed, 4);
  Recomposition rec = cut_and_merge(patch, m);
  std::vector<Polygon<Exact>> classes;
  for (const auto& tile : rec.tiles) {
    if (!tile.complete) continue;
    Polygon<Exact> poly = rebase(tile.cycle);
    bool known = false;
    for (const auto& cls : classes)
      if (congruent(cls, poly, true)) {
        known = true;
        break;
      }
    if (!known) classes.push_back(std::move(poly));
  }
  std::sort(classes.begin(), classes.end(),
            [](const Polygon<Exact>& a, const Polygon<Exact>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return as_double(a.area()) < as_double(b.area());
            });
  return cache.emplace(marking_key(m), std::move(classes)).first->second;
}

}  // namespace

std::vector<Polygon<Exact>> ammann_prototiles(const AmmannMarking& m) {
  require_generic(m);
  return reference_shapes(m);
}

Tiling<Exact> ammann_recompose(const Tiling<Exact>& t, const AmmannMarking& m) {
  require_rhombus_patch(t);
  require_generic(m);
  auto issues = check_matching(t);
  if (!issues.empty())
    throw MatchingViolation("patch violates its matching conditions (" +
                            std::to_string(issues.size()) + " issues)");

  const auto& refs = reference_shapes(m);
  std::vector<std::string> ref_names;
  for (size_t i = 0; i < refs.size(); ++i)
    ref_names.push_back(refs[i].size() == 6
                            ? std::string("hexagon")
                            : std::string("pentagon-") +
                                  static_cast<char>('a' + (i - 1)));

  Recomposition rec = cut_and_merge(t, m);
  Tiling<Exact> out;
  out.window = t.window;
  std::vector<Polygon<Exact>> frag_shapes;
  for (const auto& tile : rec.tiles) {
    Polygon<Exact> realized = make_simple_polygon<Exact>(tile.cycle);
    std::string name;
    const Polygon<Exact>* proto = nullptr;
    if (tile.complete) {
      for (size_t i = 0; i < refs.size(); ++i)
        if (congruent(refs[i], realized, true)) {
          name = ref_names[i];
          proto = &refs[i];
          break;
        }
    }
    if (!proto) {
      for (size_t i = 0; i < frag_shapes.size(); ++i)
        if (congruent(frag_shapes[i], realized, true)) {
          name = "fragment-" + std::to_string(i + 1);
          proto = &frag_shapes[i];
          break;
        }
      if (!proto) {
        frag_shapes.push_back(rebase(tile.cycle));
        name = "fragment-" + std::to_string(frag_shapes.size());
        proto = &frag_shapes.back();
      }
    }
    if (out.prototiles.find(name) == out.prototiles.end())
      out.prototiles.emplace(name, MarkedPrototile<Exact>{name, *proto, {}});
    Iso g = *congruent(out.prototiles.at(name).polygon, realized, true);
    out.tiles.push_back({name, g});
  }
  return out;
}

}  // namespace tessella
