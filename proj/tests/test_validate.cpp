#include "doctest.h"
#include "tessella/validate.hpp"

#include <cmath>

using namespace tessella;

namespace {

using VD = Vec2<double>;

Tiling<double> square_grid(int m, int n) {
  Tiling<double> t;
  t.prototiles.emplace(
      "square",
      MarkedPrototile<double>{
          "square", make_polygon<double>({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
          std::nullopt});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      t.tiles.push_back(
          {"square", Isometry<double>::translation({double(i), double(j)})});
  t.window = {0.5, 0.5, m - 0.5, n - 0.5};  // inner window
  return t;
}

Tiling<Exact> exact_square_grid(int m, int n) {
  Tiling<Exact> t;
  t.prototiles.emplace(
      "square",
      MarkedPrototile<Exact>{
          "square",
          make_polygon<Exact>({{Exact(0), Exact(0)},
                               {Exact(1), Exact(0)},
                               {Exact(1), Exact(1)},
                               {Exact(0), Exact(1)}}),
          std::nullopt});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      t.tiles.push_back(
          {"square", Isometry<Exact>::translation({Exact(i), Exact(j)})});
  t.window = {0.5, 0.5, m - 0.5, n - 0.5};
  return t;
}

// brick wall: rows of 1x2 bricks, every other row shifted by 1
Tiling<double> brick_wall(int m, int n) {
  Tiling<double> t;
  t.prototiles.emplace(
      "brick",
      MarkedPrototile<double>{
          "brick", make_polygon<double>({{0, 0}, {2, 0}, {2, 1}, {0, 1}}),
          std::nullopt});
  for (int j = 0; j < n; ++j) {
    double off = (j % 2 == 0) ? 0.0 : 1.0;
    for (int i = -1; i < m; ++i)
      t.tiles.push_back(
          {"brick", Isometry<double>::translation({2 * i + off, double(j)})});
  }
  t.window = {0.5, 0.5, 2 * m - 1.5, n - 0.5};
  return t;
}

// does (u1,u2) generate the same lattice as (v1,v2)?  double version
bool same_lattice(VD u1, VD u2, VD v1, VD v2) {
  double det = v1.x * v2.y - v1.y * v2.x;
  if (std::abs(det) < 1e-12) return false;
  auto coords = [&](VD u) {
    double a = (u.x * v2.y - u.y * v2.x) / det;
    double b = (v1.x * u.y - v1.y * u.x) / det;
    return std::make_pair(a, b);
  };
  auto near_int = [](double x) { return std::abs(x - std::round(x)) < 1e-9; };
  auto [a1, b1] = coords(u1);
  auto [a2, b2] = coords(u2);
  if (!near_int(a1) || !near_int(b1) || !near_int(a2) || !near_int(b2))
    return false;
  double d2 = std::round(a1) * std::round(b2) - std::round(b1) * std::round(a2);
  return std::abs(std::abs(d2) - 1) < 1e-9;
}

}  // namespace

TEST_CASE("square grid passes every check") {
  auto t = square_grid(4, 4);
  CHECK(check_no_overlap(t).empty());
  CHECK(check_coverage(t, t.window).witnesses.empty());
  CHECK(check_edge_to_edge(t).empty());
  CHECK(check_monohedral(t));
  auto per = detect_periodicity(t);
  REQUIRE(per.has_value());
  CHECK(same_lattice(per->first, per->second, {1, 0}, {0, 1}));
  auto rep = validate_all(t);
  CHECK(rep.all_pass());
  CHECK(rep.coverage_pitch > 0);
  CHECK(rep.coverage_pitch <= 1.0 / 8 + 1e-12);
}

TEST_CASE("exact square grid periodicity is exact") {
  auto t = exact_square_grid(4, 4);
  auto per = detect_periodicity(t);
  REQUIRE(per.has_value());
  CHECK(same_lattice(as_double(per->first), as_double(per->second), {1, 0},
                     {0, 1}));
  CHECK(validate_all(t).all_pass());
}

TEST_CASE("duplicated tile is an overlap") {
  auto t = square_grid(3, 3);
  t.tiles.push_back(t.tiles[4]);
  auto violations = check_no_overlap(t);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].first == 4);
  CHECK(violations[0].second == t.tiles.size() - 1);
}

TEST_CASE("half-overlapping square is an overlap") {
  auto t = square_grid(2, 1);
  t.window = {0, 0, 2, 1};
  t.tiles.push_back(
      {"square", Isometry<double>::translation({0.5, 0.0})});
  auto violations = check_no_overlap(t);
  CHECK(violations.size() == 2);  // against both grid squares
}

TEST_CASE("removing a tile leaves a gap with a witness inside it") {
  auto t = square_grid(4, 4);
  // drop the tile at cell (1,2)
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    if (t.tiles[i].transform.tx == 1.0 && t.tiles[i].transform.ty == 2.0) {
      t.tiles.erase(t.tiles.begin() + i);
      break;
    }
  }
  auto cov = check_coverage(t, t.window);
  REQUIRE(cov.witnesses.size() == 1);
  CHECK(cov.witnesses[0].x > 1.0 - 1e-9);
  CHECK(cov.witnesses[0].x < 2.0 + 1e-9);
  CHECK(cov.witnesses[0].y > 2.0 - 1e-9);
  CHECK(cov.witnesses[0].y < 3.0 + 1e-9);

  // two separated holes give two witnesses
  auto t2 = square_grid(8, 4);
  auto drop = [&](double x, double y) {
    for (size_t i = 0; i < t2.tiles.size(); ++i)
      if (t2.tiles[i].transform.tx == x && t2.tiles[i].transform.ty == y) {
        t2.tiles.erase(t2.tiles.begin() + i);
        return;
      }
  };
  drop(1, 1);
  drop(5, 2);
  CHECK(check_coverage(t2, t2.window).witnesses.size() == 2);
}

TEST_CASE("empty tiling yields a gap witness") {
  Tiling<double> t;
  t.window = {0, 0, 1, 1};
  auto cov = check_coverage(t, t.window);
  CHECK(!cov.witnesses.empty());
}

TEST_CASE("brick wall is valid but not edge-to-edge") {
  auto t = brick_wall(4, 4);
  CHECK(check_no_overlap(t).empty());
  CHECK(check_coverage(t, t.window).witnesses.empty());
  auto violations = check_edge_to_edge(t);
  CHECK(!violations.empty());
  CHECK(check_monohedral(t));
  // shifted rows still admit translations: (2,0) and (1,2)... actually (0,2)
  auto per = detect_periodicity(t);
  REQUIRE(per.has_value());
  bool brick_lattice = same_lattice(per->first, per->second, {2, 0}, {1, 1}) ||
                       same_lattice(per->first, per->second, {2, 0}, {0, 2}) ||
                       same_lattice(per->first, per->second, {2, 0}, {1, -1});
  CHECK(brick_lattice);
}

TEST_CASE("square grid stays edge-to-edge with vertex contacts only") {
  auto t = square_grid(3, 3);
  CHECK(check_edge_to_edge(t).empty());
}

TEST_CASE("monohedral distinguishes prototile shapes, not names") {
  auto t = square_grid(2, 2);
  // congruent duplicate under another name, rotated placement
  t.prototiles.emplace(
      "square2",
      MarkedPrototile<double>{
          "square2",
          make_polygon<double>({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
          std::nullopt});
  t.tiles.push_back({"square2", Isometry<double>::translation({5.0, 0.0})});
  CHECK(check_monohedral(t));

  t.prototiles.emplace(
      "plank",
      MarkedPrototile<double>{
          "plank", make_polygon<double>({{0, 0}, {2, 0}, {2, 1}, {0, 1}}),
          std::nullopt});
  t.tiles.push_back({"plank", Isometry<double>::translation({8.0, 0.0})});
  CHECK(!check_monohedral(t));
}

TEST_CASE("periodicity needs more than a vacuous match") {
  // two squares side by side: the only candidate maps one tile onto the
  // other, which is too little evidence
  Tiling<double> t = square_grid(2, 1);
  t.window = {0, 0, 2, 1};
  CHECK(!detect_periodicity(t).has_value());
  // a single column is genuinely periodic in one direction only
  auto col = square_grid(1, 6);
  col.window = {0, 0, 1, 6};
  CHECK(!detect_periodicity(col).has_value());
}

TEST_CASE("validator checks are isometry-equivariant") {
  auto base = square_grid(5, 5);
  double ang = 37.0 * 3.14159265358979323846 / 180.0;
  Isometry<double> g{std::cos(ang), std::sin(ang), 0.3, -0.8, false};

  Tiling<double> moved = base;
  moved.tiles.clear();
  for (const auto& tile : base.tiles)
    moved.tiles.push_back({tile.prototile, g * tile.transform});
  // largest axis-aligned box inscribed in the rotated 5x5 patch
  VD c = g(VD{2.5, 2.5});
  double half = 2.5 / (std::cos(ang) + std::sin(ang));
  moved.window = {c.x - half, c.y - half, c.x + half, c.y + half};

  CHECK(check_no_overlap(moved).empty());
  CHECK(check_coverage(moved, moved.window).witnesses.empty());
  CHECK(check_edge_to_edge(moved).empty());
  CHECK(check_monohedral(moved));
  auto per = detect_periodicity(moved);
  REQUIRE(per.has_value());
  VD u1 = per->first, u2 = per->second;
  VD e1 = g.apply_vector({1, 0}), e2 = g.apply_vector({0, 1});
  CHECK(same_lattice(u1, u2, e1, e2));
}
