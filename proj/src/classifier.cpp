#include "tessella/classifier.hpp"

namespace tessella {

std::string type_name(const TileTypeId& t) {
  switch (t.cls) {
    case TileClass::Triangle:
      return "Triangle";
    case TileClass::Quadrilateral:
      return "Quadrilateral";
    case TileClass::Pentagon:
      return "P" + std::to_string(t.index);
    case TileClass::Hexagon:
      return "H" + std::to_string(t.index);
  }
  return "?";
}

std::optional<TileTypeId> type_from_name(const std::string& s) {
  if (s == "Triangle") return TileTypeId::triangle();
  if (s == "Quadrilateral") return TileTypeId::quadrilateral();
  if (s.size() >= 2 && (s[0] == 'P' || s[0] == 'H')) {
    int k = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      k = k * 10 + (s[i] - '0');
    }
    if (s[0] == 'P' && k >= 1 && k <= 15) return TileTypeId::pentagon(k);
    if (s[0] == 'H' && k >= 1 && k <= 3) return TileTypeId::hexagon(k);
  }
  return std::nullopt;
}

namespace {

// slot helpers for readability of the table below
constexpr int A = 0, B = 1, C = 2, D = 3, E = 4, F = 5;
constexpr int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5;

AngleRel ar(std::initializer_list<std::pair<int, int>> terms, int target) {
  AngleRel r;
  for (auto [slot, coef] : terms) r.coef[slot] = coef;
  r.target_deg = target;
  return r;
}

EdgeRel er(std::initializer_list<std::pair<int, int>> terms) {
  EdgeRel r;
  for (auto [slot, coef] : terms) r.coef[slot] = coef;
  return r;
}

FixedAngle right_angle(int slot) {
  return {slot, 90.0, 0, {Exact(0), Exact(0), 0}};
}

FixedAngle fixed(int slot, double deg, int sign, Exact qa, Exact qb, int d) {
  return {slot, deg, sign, {qa, qb, d}};
}

std::vector<TypeSpec> build_table() {
  std::vector<TypeSpec> t;

  t.push_back({TileTypeId::triangle(), 3, {}, {}, {}});
  t.push_back({TileTypeId::quadrilateral(), 4, {}, {}, {}});

  // pentagons; angle targets in degrees, edge relations sum to zero
  t.push_back({TileTypeId::pentagon(1), 5,
               {ar({{A, 1}, {B, 1}, {C, 1}}, 360)},
               {},
               {}});
  t.push_back({TileTypeId::pentagon(2), 5,
               {ar({{B, 1}, {D, 1}}, 180)},
               {er({{c, 1}, {e, -1}})},
               {}});
  t.push_back({TileTypeId::pentagon(3), 5,
               {ar({{A, 1}}, 120), ar({{C, 1}}, 120), ar({{D, 1}}, 120)},
               {er({{a, 1}, {b, -1}}), er({{d, 1}, {c, -1}, {e, -1}})},
               {}});
  t.push_back({TileTypeId::pentagon(4), 5,
               {},
               {er({{b, 1}, {c, -1}}), er({{d, 1}, {e, -1}})},
               {right_angle(B), right_angle(D)}});
  t.push_back({TileTypeId::pentagon(5), 5,
               {ar({{A, 1}}, 60), ar({{D, 1}}, 120)},
               {er({{a, 1}, {b, -1}}), er({{d, 1}, {e, -1}})},
               {}});
  t.push_back({TileTypeId::pentagon(6), 5,
               {ar({{B, 1}, {D, 1}}, 180), ar({{B, 2}, {E, -1}}, 0)},
               {er({{a, 1}, {d, -1}}), er({{d, 1}, {e, -1}}),
                er({{b, 1}, {c, -1}})},
               {}});
  t.push_back({TileTypeId::pentagon(7), 5,
               {ar({{B, 1}, {E, 2}}, 360), ar({{C, 2}, {D, 1}}, 360)},
               {er({{b, 1}, {c, -1}}), er({{c, 1}, {d, -1}}),
                er({{d, 1}, {e, -1}})},
               {}});
  t.push_back({TileTypeId::pentagon(8), 5,
               {ar({{B, 2}, {C, 1}}, 360), ar({{D, 1}, {E, 2}}, 360)},
               {er({{b, 1}, {c, -1}}), er({{c, 1}, {d, -1}}),
                er({{d, 1}, {e, -1}})},
               {}});
  t.push_back({TileTypeId::pentagon(9), 5,
               {ar({{A, 2}, {C, 1}}, 360), ar({{D, 1}, {E, 2}}, 360)},
               {er({{b, 1}, {c, -1}}), er({{c, 1}, {d, -1}}),
                er({{d, 1}, {e, -1}})},
               {}});
  t.push_back({TileTypeId::pentagon(10), 5,
               {ar({{B, 1}, {E, 1}}, 180), ar({{B, 1}, {C, 2}}, 360)},
               {er({{a, 1}, {b, -1}}), er({{a, 1}, {c, -1}, {e, -1}})},
               {right_angle(A)}});
  t.push_back({TileTypeId::pentagon(11), 5,
               {ar({{C, 1}, {E, 1}}, 180), ar({{B, 2}, {C, 1}}, 360)},
               {er({{d, 1}, {e, -1}}), er({{a, 2}, {c, 1}, {d, -1}})},
               {right_angle(A)}});
  t.push_back({TileTypeId::pentagon(12), 5,
               {ar({{C, 1}, {E, 1}}, 180), ar({{B, 2}, {C, 1}}, 360)},
               {er({{a, 2}, {d, -1}}), er({{d, 1}, {c, -1}, {e, -1}})},
               {right_angle(A)}});
  t.push_back({TileTypeId::pentagon(13), 5,
               {ar({{A, 2}, {D, 1}}, 360)},
               {er({{a, 2}, {d, -1}}), er({{e, 2}, {d, -1}})},
               {right_angle(B), right_angle(E)}});
  // type 14 pins angle C at arccos((3*sqrt57 - 17)/16) ~ 69.32 degrees;
  // cos^2 C = (401 - 51*sqrt57)/128
  t.push_back({TileTypeId::pentagon(14), 5,
               {ar({{C, 1}, {E, 1}}, 180), ar({{B, 2}, {C, 1}}, 360)},
               {er({{a, 1}, {c, -1}}), er({{d, 1}, {e, -1}}),
                er({{a, 2}, {d, -1}})},
               {right_angle(A),
                fixed(C, 69.32332747699289, 1, Exact::frac(401, 128),
                      Exact::frac(-51, 128), 57)}});
  // type 15 is rigid up to scale: angles 150,60,135,105,90 with a=c=e, b=2a
  t.push_back({TileTypeId::pentagon(15), 5,
               {},
               {er({{a, 1}, {c, -1}}), er({{c, 1}, {e, -1}}),
                er({{a, 2}, {b, -1}})},
               {fixed(A, 150.0, -1, Exact::frac(3, 4), Exact(0), 0),
                fixed(B, 60.0, 1, Exact::frac(1, 4), Exact(0), 0),
                fixed(C, 135.0, -1, Exact::frac(1, 2), Exact(0), 0),
                fixed(D, 105.0, -1, Exact::frac(1, 2), Exact::frac(-1, 4), 3),
                right_angle(E)}});

  // hexagons
  t.push_back({TileTypeId::hexagon(1), 6,
               {ar({{A, 1}, {B, 1}, {C, 1}}, 360)},
               {er({{a, 1}, {d, -1}})},
               {}});
  t.push_back({TileTypeId::hexagon(2), 6,
               {ar({{A, 1}, {B, 1}, {D, 1}}, 360)},
               {er({{a, 1}, {d, -1}}), er({{c, 1}, {e, -1}})},
               {}});
  t.push_back({TileTypeId::hexagon(3), 6,
               {ar({{A, 1}}, 120), ar({{C, 1}}, 120), ar({{E, 1}}, 120)},
               {er({{a, 1}, {b, -1}}), er({{c, 1}, {d, -1}}),
                er({{e, 1}, {f, -1}})},
               {}});

  return t;
}

}  // namespace

const std::vector<TypeSpec>& tile_type_table() {
  static const std::vector<TypeSpec> table = build_table();
  return table;
}

}  // namespace tessella
