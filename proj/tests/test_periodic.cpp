#include "doctest.h"
#include "tessella/periodic.hpp"
#include "tessella/samples.hpp"
#include "tessella/validate.hpp"

#include <cmath>

using namespace tessella;

namespace {

using VD = Vec2<double>;

// do (u1,u2) and (v1,v2) generate the same lattice?
bool same_lattice(VD u1, VD u2, VD v1, VD v2) {
  double det = v1.x * v2.y - v1.y * v2.x;
  if (std::abs(det) < 1e-12) return false;
  auto coords = [&](VD u) {
    double a = (u.x * v2.y - u.y * v2.x) / det;
    double b = (v1.x * u.y - v1.y * u.x) / det;
    return std::make_pair(a, b);
  };
  auto near_int = [](double x) { return std::abs(x - std::round(x)) < 1e-6; };
  auto [a1, b1] = coords(u1);
  auto [a2, b2] = coords(u2);
  if (!near_int(a1) || !near_int(b1) || !near_int(a2) || !near_int(b2))
    return false;
  double d2 = std::round(a1) * std::round(b2) - std::round(b1) * std::round(a2);
  return std::abs(std::abs(d2) - 1) < 1e-9;
}

double cross_d(VD a, VD b) { return a.x * b.y - a.y * b.x; }

const std::vector<std::pair<TileTypeId, size_t>>& family_cells() {
  static const std::vector<std::pair<TileTypeId, size_t>> v = {
      {TileTypeId::pentagon(1), 2}, {TileTypeId::pentagon(2), 4},
      {TileTypeId::pentagon(4), 4}, {TileTypeId::pentagon(5), 6},
      {TileTypeId::pentagon(6), 8}, {TileTypeId::pentagon(7), 8},
      {TileTypeId::pentagon(8), 8}, {TileTypeId::pentagon(9), 8},
      {TileTypeId::hexagon(1), 2},  {TileTypeId::hexagon(2), 4},
      {TileTypeId::hexagon(3), 3}};
  return v;
}

FundamentalRegion<double> region_for(const TileTypeId& t, unsigned seed) {
  auto lp = sample_tile_e2e(t, seed);
  return t.cls == TileClass::Pentagon ? pentagon_fundamental_e2e(lp, t)
                                      : hexagon_fundamental(lp, t);
}

}  // namespace

TEST_CASE("triangle region is the forced parallelogram") {
  auto t = make_polygon<double>({{0, 0}, {1, 0}, {0, 1}});
  auto r = triangle_fundamental(t);
  REQUIRE(r.tiles.size() == 2);
  CHECK(r.v1.x == doctest::Approx(1));
  CHECK(r.v1.y == doctest::Approx(0));
  CHECK(r.v2.x == doctest::Approx(0));
  CHECK(r.v2.y == doctest::Approx(1));
  CHECK(r.tiles[1].transform.rot_c == doctest::Approx(-1));

  auto patch = generate_patch(r, 3, 3);
  CHECK(patch.tiles.size() == 18);
  CHECK(validate_all(patch).all_pass());
}

TEST_CASE("equilateral triangle gives the 60 degree rhombus") {
  double h = std::sqrt(3.0) / 2;
  auto t = make_polygon<double>({{0, 0}, {1, 0}, {0.5, h}});
  auto r = triangle_fundamental(t);
  double l1 = std::hypot(r.v1.x, r.v1.y);
  double l2 = std::hypot(r.v2.x, r.v2.y);
  CHECK(l1 == doctest::Approx(1));
  CHECK(l2 == doctest::Approx(1));
  double d = r.v1.x * r.v2.x + r.v1.y * r.v2.y;
  CHECK(std::abs(d) == doctest::Approx(0.5));
}

TEST_CASE("scalene triangle tiles a 5x5 patch cleanly") {
  auto t = make_polygon<double>({{0, 0}, {1.7, 0.2}, {0.4, 1.1}});
  auto patch = generate_patch(triangle_fundamental(t), 5, 5);
  auto rep = validate_all(patch);
  CHECK(rep.all_pass());
  CHECK(rep.periodicity.has_value());
}

TEST_CASE("unit square region is the degenerate 1x2 rectangle") {
  auto q = make_polygon<double>({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto r = quadrilateral_fundamental(q);
  REQUIRE(r.tiles.size() == 2);
  // second copy is the half turn about the midpoint of edge 0
  auto img = q.transformed(r.tiles[1].transform);
  Rect bb = img.bbox();
  CHECK(bb.xmin == doctest::Approx(0));
  CHECK(bb.xmax == doctest::Approx(1));
  CHECK(bb.ymin == doctest::Approx(-1));
  CHECK(bb.ymax == doctest::Approx(0));
  // lattice spanned by the diagonals
  CHECK(std::abs(cross_d(as_double(r.v1), as_double(r.v2))) ==
        doctest::Approx(2));
  CHECK(same_lattice(as_double(r.v1), as_double(r.v2), {1, 1}, {-1, 1}));
  CHECK(validate_all(generate_patch(r, 4, 4)).all_pass());
}

TEST_CASE("quadrilateral region is a centrally symmetric hexagon") {
  auto q = make_polygon<double>({{0, 0}, {2, 0}, {2.6, 1.4}, {0.7, 2.1}});
  auto r = quadrilateral_fundamental(q);
  auto g = r.tiles[1].transform;
  // hexagon boundary: edges 1..3 of the tile, then their half-turn images
  VD h[6] = {as_double(q.vertex(1)), as_double(q.vertex(2)),
             as_double(q.vertex(3)), as_double(g(q.vertex(1))),
             as_double(g(q.vertex(2))), as_double(g(q.vertex(3)))};
  CHECK(h[3].x == doctest::Approx(q.vertex(0).x));
  CHECK(h[3].y == doctest::Approx(q.vertex(0).y));
  for (int i = 0; i < 3; ++i) {
    VD e1{h[(i + 1) % 6].x - h[i].x, h[(i + 1) % 6].y - h[i].y};
    VD e2{h[(i + 4) % 6].x - h[(i + 3) % 6].x,
          h[(i + 4) % 6].y - h[(i + 3) % 6].y};
    CHECK(e1.x == doctest::Approx(-e2.x));
    CHECK(e1.y == doctest::Approx(-e2.y));
  }
  auto rep = validate_all(generate_patch(r, 4, 4));
  CHECK(rep.all_pass());
  CHECK(rep.periodicity.has_value());
}

TEST_CASE("layout table covers exactly the edge-to-edge families") {
  for (const auto& [t, cell] : family_cells()) {
    CAPTURE(type_name(t));
    const LayoutProgram* p = find_layout(t);
    REQUIRE(p != nullptr);
    CHECK(p->steps.size() + 1 == cell);
  }
  CHECK(find_layout(TileTypeId::pentagon(3)) == nullptr);
  for (int k = 10; k <= 15; ++k)
    CHECK(find_layout(TileTypeId::pentagon(k)) == nullptr);
}

TEST_CASE("every family region tiles a 4x4 patch cleanly") {
  for (const auto& [t, cell] : family_cells()) {
    CAPTURE(type_name(t));
    auto r = region_for(t, 17);
    REQUIRE(r.tiles.size() == cell);
    double area = 0;
    for (const auto& [name, proto] : r.prototiles) area = proto.polygon.area();
    CHECK(std::abs(cross_d(as_double(r.v1), as_double(r.v2))) ==
          doctest::Approx(cell * area).epsilon(1e-9));

    auto patch = generate_patch(r, 4, 4);
    CHECK(patch.tiles.size() == 16 * cell);
    auto rep = validate_all(patch);
    CHECK(rep.overlaps.empty());
    CHECK(rep.gaps.empty());
    CHECK(rep.edge_to_edge_violations.empty());
    CHECK(rep.monohedral);
    REQUIRE(rep.periodicity.has_value());
    CHECK(same_lattice(as_double(rep.periodicity->first),
                       as_double(rep.periodicity->second), as_double(r.v1),
                       as_double(r.v2)));
  }
}

TEST_CASE("glued copies share their full edge") {
  auto lp = sample_tile_e2e(TileTypeId::pentagon(4), 5);
  const LayoutProgram* prog = find_layout(TileTypeId::pentagon(4));
  REQUIRE(prog != nullptr);
  auto r = detail::run_layout(lp, *prog, "tile");
  const auto& st = prog->steps[0];
  auto parent = lp.polygon.transformed(r.tiles[st.parent].transform);
  auto child = lp.polygon.transformed(r.tiles[1].transform);
  int n = 5;
  auto pv = [&](int slot) {
    return as_double(
        parent.vertex(detail::label_vertex(lp, ((slot % n) + n) % n)));
  };
  auto cv = [&](int slot) {
    return as_double(
        child.vertex(detail::label_vertex(lp, ((slot % n) + n) % n)));
  };
  VD p0 = pv(st.parent_slot - 1), p1 = pv(st.parent_slot);
  VD c0 = cv(st.child_slot - 1), c1 = cv(st.child_slot);
  bool fwd = std::hypot(p0.x - c0.x, p0.y - c0.y) < 1e-9 &&
             std::hypot(p1.x - c1.x, p1.y - c1.y) < 1e-9;
  bool rev = std::hypot(p0.x - c1.x, p0.y - c1.y) < 1e-9 &&
             std::hypot(p1.x - c0.x, p1.y - c0.y) < 1e-9;
  CHECK((fwd || rev));
}

TEST_CASE("mirrored input tiles just as well") {
  auto lp = sample_tile_e2e(TileTypeId::pentagon(4), 9);
  Isometry<double> mirror{1, 0, 0, 0, true};
  // reflection reverses the stored cycle, so label A moves to n-1-offset
  // and the labels now run the other way around
  LabeledPolygon<double> flipped{lp.polygon.transformed(mirror),
                                 (5 - 1 - lp.offset) % 5, !lp.reflected};
  REQUIRE(matches_type(flipped, TileTypeId::pentagon(4)));
  auto r = pentagon_fundamental_e2e(flipped, TileTypeId::pentagon(4));
  auto rep = validate_all(generate_patch(r, 4, 4));
  CHECK(rep.all_pass());
  CHECK(rep.periodicity.has_value());
}

TEST_CASE("patch dimensions follow the request") {
  auto t = make_polygon<double>({{0, 0}, {1.3, 0.1}, {0.2, 0.9}});
  auto r = triangle_fundamental(t);
  auto one = generate_patch(r, 1, 1);
  CHECK(one.tiles.size() == 2);
  CHECK(one.window.xmin == one.window.xmax);
  CHECK(one.window.ymin == one.window.ymax);
  CHECK(check_coverage(one, one.window).witnesses.empty());
  CHECK(generate_patch(r, 2, 5).tiles.size() == 20);
  CHECK_THROWS_AS(generate_patch(r, 0, 3), std::invalid_argument);
}

TEST_CASE("unsupported pentagon types are refused") {
  for (int k : {3, 10, 14}) {
    auto lp = sample_tile(TileTypeId::pentagon(k), 1);
    try {
      pentagon_fundamental_e2e(lp, TileTypeId::pentagon(k));
      FAIL("expected UnsupportedType for type ", k);
    } catch (const ClassifyError& e) {
      CHECK(e.kind() == ClassifyError::Kind::UnsupportedType);
    }
  }
}

TEST_CASE("family conditions are enforced on entry") {
  // a generic type-1 pentagon lacks the extra edge equality
  auto generic = sample_tile(TileTypeId::pentagon(1), 2);
  try {
    pentagon_fundamental_e2e(generic, TileTypeId::pentagon(1));
    FAIL("expected TypeConditionNotMet");
  } catch (const ClassifyError& e) {
    CHECK(e.kind() == ClassifyError::Kind::TypeConditionNotMet);
  }
  // a type-1-only hexagon offered as type 2
  auto h1 = sample_tile(TileTypeId::hexagon(1), 4);
  REQUIRE(!matches_type(h1, TileTypeId::hexagon(2)));
  try {
    hexagon_fundamental(h1, TileTypeId::hexagon(2));
    FAIL("expected TypeConditionNotMet");
  } catch (const ClassifyError& e) {
    CHECK(e.kind() == ClassifyError::Kind::TypeConditionNotMet);
  }
  CHECK_THROWS_AS(
      triangle_fundamental(make_polygon<double>({{0, 0}, {1, 0}, {1, 1}, {0, 1}})),
      ClassifyError);
  CHECK_THROWS_AS(
      quadrilateral_fundamental(make_polygon<double>({{0, 0}, {1, 0}, {0, 1}})),
      ClassifyError);
}

TEST_CASE("exact backend runs a hexagon layout end to end") {
  // centrally symmetric hexagon: A+B+C = 360 and a = d hold by symmetry
  auto h = make_polygon<Exact>({{Exact(0), Exact(0)},
                                {Exact(2), Exact(0)},
                                {Exact(3), Exact(1)},
                                {Exact(3), Exact(2)},
                                {Exact(1), Exact(2)},
                                {Exact(0), Exact(1)}});
  LabeledPolygon<Exact> lp{h, 0, false};
  REQUIRE(matches_type(lp, TileTypeId::hexagon(1)));
  auto r = hexagon_fundamental(lp, TileTypeId::hexagon(1));
  REQUIRE(r.tiles.size() == 2);
  auto patch = generate_patch(r, 3, 3);
  auto rep = validate_all(patch);
  CHECK(rep.all_pass());
  REQUIRE(rep.periodicity.has_value());
  CHECK(same_lattice(as_double(rep.periodicity->first),
                     as_double(rep.periodicity->second), as_double(r.v1),
                     as_double(r.v2)));
}

TEST_CASE("exact backend runs the quadrilateral layout") {
  auto q = make_polygon<Exact>({{Exact(0), Exact(0)},
                                {Exact(2), Exact(0)},
                                {Exact(3), Exact(1)},
                                {Exact(1), Exact(3)}});
  auto r = quadrilateral_fundamental(q);
  auto rep = validate_all(generate_patch(r, 3, 3));
  CHECK(rep.all_pass());
  CHECK(rep.periodicity.has_value());
}

TEST_CASE("extreme edge ratios stay clean at scale") {
  // this family yields samples with edge ratios beyond 10^4; the validator
  // must not report phantom overlaps on them
  auto r = region_for(TileTypeId::pentagon(5), 12);
  auto rep = validate_all(generate_patch(r, 4, 4));
  CHECK(rep.overlaps.empty());
  CHECK(rep.gaps.empty());
  CHECK(rep.edge_to_edge_violations.empty());
  CHECK(rep.periodicity.has_value());
}
