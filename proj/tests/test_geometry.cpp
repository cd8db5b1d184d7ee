#include "doctest.h"
#include "tessella/polygon.hpp"

#include <cmath>
#include <random>

using namespace tessella;

namespace {

const double PI = 3.14159265358979323846;
using VD = Vec2<double>;
using VE = Vec2<Exact>;

Polygon<double> poly(std::vector<VD> pts) { return make_polygon(std::move(pts)); }

// regular pentagon with unit circumradius, one vertex straight up
Polygon<Exact> exact_pentagon() {
  std::vector<VE> pts;
  for (int k = 0; k < 5; ++k) {
    int a = 5 + 4 * k;  // degrees / 18
    pts.push_back({exact_cos_deg18(a), exact_sin_deg18(a)});
  }
  return make_polygon(std::move(pts));
}

}  // namespace

TEST_CASE("make_polygon accepts squares in either orientation") {
  auto ccw = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(ccw.size() == 4);
  CHECK(ccw.area() == doctest::Approx(1.0));

  auto cw = poly({{0, 1}, {1, 1}, {1, 0}, {0, 0}});
  CHECK(cw.area() == doctest::Approx(1.0));
  CHECK(cw.verts()[0] == VD{0, 0});  // reversed into CCW
  CHECK(congruent(ccw, cw, false).has_value());
}

TEST_CASE("make_polygon rejects bad input") {
  CHECK_THROWS_WITH_AS(poly({{0, 0}, {1, 0}, {2, 0}, {1, 1}}),
                       "three consecutive vertices are collinear",
                       GeometryError);
  try {
    poly({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
  } catch (const GeometryError& e) {
    CHECK(e.kind() == GeometryError::Kind::DegenerateCollinear);
  }

  try {  // L-shape
    poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    CHECK(false);
  } catch (const GeometryError& e) {
    CHECK(e.kind() == GeometryError::Kind::NonConvex);
  }

  try {  // pentagram in star order winds twice but every turn is CCW
    std::vector<VD> star;
    for (int k = 0; k < 5; ++k) {
      double t = PI / 2 + k * 4 * PI / 5;
      star.push_back({std::cos(t), std::sin(t)});
    }
    poly(star);
    CHECK(false);
  } catch (const GeometryError& e) {
    CHECK(e.kind() == GeometryError::Kind::SelfIntersecting);
  }

  CHECK_THROWS_AS(poly({{0, 0}, {1, 0}}), GeometryError);
  CHECK_THROWS_AS(poly({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), GeometryError);
  CHECK_THROWS_AS(poly({{0, 0}, {1, 0}, {2, 0}}), GeometryError);
}

TEST_CASE("make_simple_polygon admits reflex vertices") {
  auto chevron = make_simple_polygon<double>({{0, 0}, {2, 2}, {4, 0}, {2, 6}});
  CHECK(chevron.size() == 4);
  CHECK(chevron.convex() == false);
  CHECK(chevron.area() == doctest::Approx(8.0));

  try {
    make_simple_polygon<double>({{0, 0}, {1, 1}, {1, 0}, {0, 1.5}});
    CHECK(false);
  } catch (const GeometryError& e) {
    CHECK(e.kind() == GeometryError::Kind::SelfIntersecting);
  }
}

TEST_CASE("interior angles of reference shapes") {
  auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  for (double a : interior_angles(sq)) CHECK(a == doctest::Approx(PI / 2));

  auto pent = exact_pentagon();
  for (double a : interior_angles(pent))
    CHECK(a == doctest::Approx(108.0 * PI / 180.0));

  std::vector<VD> hex;
  for (int k = 0; k < 6; ++k) {
    double t = k * PI / 3;
    hex.push_back({2 * std::cos(t), std::sin(t)});  // squashed hexagon
  }
  double sum = 0;
  for (double a : interior_angles(poly(hex))) sum += a;
  CHECK(sum == doctest::Approx(4 * PI));

  auto chevron = make_simple_polygon<double>({{0, 0}, {2, 2}, {4, 0}, {2, 6}});
  auto angles = interior_angles(chevron);
  CHECK(angles[1] > PI);  // reflex notch
  double s2 = 0;
  for (double a : angles) s2 += a;
  CHECK(s2 == doctest::Approx(2 * PI));
}

TEST_CASE("congruent finds rotations, reflections, and rejects lookalikes") {
  auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

  double t = 37.0 * PI / 180.0;
  double c = std::cos(t), s = std::sin(t);
  Isometry<double> g{c, s, 0.7, -1.3, false};
  auto rotated = sq.transformed(g);
  auto w = congruent(sq, rotated, false);
  REQUIRE(w.has_value());
  CHECK(w->rot_c == doctest::Approx(c));
  CHECK(std::abs(w->rot_s) == doctest::Approx(s));

  auto tri = poly({{0, 0}, {3, 0}, {0, 1}});
  auto mirror = poly({{0, 0}, {0, 1}, {-3, 0}});  // reflected copy
  CHECK(!congruent(tri, mirror, false).has_value());
  auto wr = congruent(tri, mirror, true);
  REQUIRE(wr.has_value());
  CHECK(wr->reflected);
  auto mapped = tri.transformed(*wr);
  CHECK(congruent(mapped, mirror, false).has_value());

  auto rect = poly({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  CHECK(!congruent(sq, rect, true).has_value());
  CHECK(!congruent(sq, poly({{0, 0}, {1, 0}, {0.5, 1}}), true).has_value());

  auto self = congruent(sq, sq, true);
  REQUIRE(self.has_value());
  CHECK(*self == Isometry<double>::identity());
}

TEST_CASE("congruent on the exact backend is tolerance-free") {
  auto pent = exact_pentagon();
  Isometry<Exact> rot36{exact_cos_deg18(2), exact_sin_deg18(2), Exact(3),
                        Exact::frac(-1, 7), false};
  auto moved = pent.transformed(rot36);
  auto w = congruent(pent, moved, false);
  REQUIRE(w.has_value());
  // the witness rotation is some symmetry of the pentagon composed with 36°,
  // so its cosine must be cos(36 + 72k); verify it is exactly one of those
  bool hit = false;
  for (int k = 0; k < 5; ++k) {
    if (w->rot_c == exact_cos_deg18(2 + 4 * k) &&
        w->rot_s == exact_sin_deg18(2 + 4 * k))
      hit = true;
  }
  CHECK(hit);
  CHECK(congruent(pent, moved, false)->reflected == false);
}

TEST_CASE("interiors_intersect on convex pairs") {
  auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto shifted = sq.transformed(Isometry<double>::translation({1.0, 0.0}));
  CHECK(!interiors_intersect(sq, shifted));  // full shared edge
  CHECK(interiors_intersect(sq, sq));
  auto half = sq.transformed(Isometry<double>::translation({0.5, 0.0}));
  CHECK(interiors_intersect(sq, half));
  auto corner = sq.transformed(Isometry<double>::translation({1.0, 1.0}));
  CHECK(!interiors_intersect(sq, corner));  // single shared point
  auto far = sq.transformed(Isometry<double>::translation({5.0, 0.0}));
  CHECK(!interiors_intersect(sq, far));
  CHECK(interiors_intersect(half, sq));  // symmetric
}

TEST_CASE("interiors_intersect handles reflex polygons by triangulation") {
  auto chevron = make_simple_polygon<double>({{0, 0}, {2, 2}, {4, 0}, {2, 6}});
  auto in_notch =
      poly({{1.8, 0.2}, {2.2, 0.2}, {2.2, 0.6}, {1.8, 0.6}});
  CHECK(!interiors_intersect(chevron, in_notch));
  CHECK(!interiors_intersect(in_notch, chevron));
  auto in_body = poly({{1.8, 3.8}, {2.2, 3.8}, {2.2, 4.2}, {1.8, 4.2}});
  CHECK(interiors_intersect(chevron, in_body));
  auto across = poly({{-1, 1}, {5, 1}, {5, 1.5}, {-1, 1.5}});
  CHECK(interiors_intersect(chevron, across));  // cuts both wings
}

TEST_CASE("isometry algebra") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  auto random_iso = [&]() {
    double t = U(rng);
    return Isometry<double>{std::cos(t), std::sin(t), U(rng), U(rng),
                            rng() % 2 == 0};
  };
  for (int it = 0; it < 200; ++it) {
    auto g = random_iso();
    auto h = random_iso();
    VD p{U(rng), U(rng)};
    VD lhs = (g * h)(p);
    VD rhs = g(h(p));
    CHECK(lhs.x == doctest::Approx(rhs.x).epsilon(1e-9));
    CHECK(lhs.y == doctest::Approx(rhs.y).epsilon(1e-9));
    auto gi = inverse(g);
    VD back = gi(g(p));
    CHECK(back.x == doctest::Approx(p.x).epsilon(1e-9));
    CHECK(back.y == doctest::Approx(p.y).epsilon(1e-9));
  }

  // exact backend: composition of 18°-family isometries stays in the family
  Isometry<Exact> a{exact_cos_deg18(3), exact_sin_deg18(3), Exact(1), Exact(2),
                    true};
  Isometry<Exact> b{exact_cos_deg18(7), exact_sin_deg18(7), Exact::frac(1, 3),
                    Exact(0), false};
  VE q{Exact::frac(2, 5), exact_tau()};
  CHECK((a * b)(q) == a(b(q)));
  auto ai = inverse(a);
  CHECK((ai * a)(q) == q);
  CHECK(ai(a(q)) == q);
  CHECK((a * ai) == Isometry<Exact>::identity());
}

TEST_CASE("area and angle equivariance under isometries") {
  auto pent = exact_pentagon();
  Exact expected = Exact::frac(5, 2) * Exact::s36() * exact_tau();
  CHECK(pent.area() == expected);

  Isometry<Exact> g{exact_cos_deg18(6), exact_sin_deg18(6), Exact(-2),
                    Exact(5), true};
  auto moved = pent.transformed(g);
  CHECK(moved.area() == expected);  // reflection re-normalized to CCW

  auto a1 = interior_angles(pent);
  auto a2 = interior_angles(moved);
  for (size_t i = 0; i < a1.size(); ++i)
    CHECK(a2[i] == doctest::Approx(108.0 * PI / 180.0));
}

TEST_CASE("segment predicates") {
  VD a{0, 0}, b{4, 0};
  CHECK(on_segment(a, b, {2, 0}));
  CHECK(on_segment(a, b, {0, 0}));
  CHECK(!on_segment_interior(a, b, {0, 0}));
  CHECK(on_segment_interior(a, b, {2, 0}));
  CHECK(!on_segment(a, b, {5, 0}));
  CHECK(!on_segment(a, b, {2, 0.1}));

  CHECK(segments_properly_intersect<double>({0, -1}, {0, 1}, {-1, 0}, {1, 0}));
  CHECK(!segments_properly_intersect<double>({0, 0}, {0, 1}, {0, 0}, {1, 0}));
  CHECK(segments_intersect<double>({0, 0}, {0, 1}, {0, 0}, {1, 0}));
  CHECK(!segments_intersect<double>({0, 0}, {1, 0}, {0, 1}, {1, 1}));

  CHECK(segments_overlap_collinear<double>({0, 0}, {4, 0}, {3, 0}, {6, 0}));
  CHECK(!segments_overlap_collinear<double>({0, 0}, {4, 0}, {4, 0}, {6, 0}));
  CHECK(!segments_overlap_collinear<double>({0, 0}, {4, 0}, {1, 1}, {3, 1}));
  CHECK(segments_overlap_collinear<double>({0, 0}, {4, 0}, {6, 0}, {3, 0}));
}
