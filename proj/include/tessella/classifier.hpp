#pragma once

#include <cassert>
#include <cstdlib>
#include <string>
#include <type_traits>
#include <vector>

#include "tessella/polygon.hpp"

namespace tessella {

enum class TileClass { Triangle, Quadrilateral, Pentagon, Hexagon };

struct TileTypeId {
  TileClass cls;
  int index = 0;  // 1..15 for Pentagon, 1..3 for Hexagon, 0 otherwise

  static TileTypeId triangle() { return {TileClass::Triangle, 0}; }
  static TileTypeId quadrilateral() { return {TileClass::Quadrilateral, 0}; }
  static TileTypeId pentagon(int k) { return {TileClass::Pentagon, k}; }
  static TileTypeId hexagon(int k) { return {TileClass::Hexagon, k}; }
};

inline bool operator==(const TileTypeId& a, const TileTypeId& b) {
  return a.cls == b.cls && a.index == b.index;
}
inline bool operator!=(const TileTypeId& a, const TileTypeId& b) {
  return !(a == b);
}
inline bool operator<(const TileTypeId& a, const TileTypeId& b) {
  if (a.cls != b.cls) return static_cast<int>(a.cls) < static_cast<int>(b.cls);
  return a.index < b.index;
}

std::string type_name(const TileTypeId& t);                 // "P4", "H2", ...
std::optional<TileTypeId> type_from_name(const std::string& s);

// ---- condition table ----------------------------------------------------
//
// Angle slots are A..F = 0..5, edge slots a..f = 0..5.  Edge slot k is the
// edge ENDING at vertex slot k (so edge a runs from the last vertex to A).
// An AngleRel states sum(coef_i * angle_i) = target degrees; an EdgeRel
// states sum(coef_i * length_i) = 0.

struct AngleRel {
  std::array<int, 6> coef{};
  int target_deg = 0;
};

struct EdgeRel {
  std::array<int, 6> coef{};
};

// cos^2 of a fixed angle, possibly living in a quadratic extension:
// cos^2 = qa + qb*sqrt(ext_d); ext_d = 0 means plain qa
struct CosSq {
  Exact qa;
  Exact qb;
  int ext_d = 0;
};

struct FixedAngle {
  int slot = 0;
  double target_deg = 0;
  int cos_sign = 0;  // sign of cos(target)
  CosSq cossq;
};

struct TypeSpec {
  TileTypeId id;
  int n = 0;
  std::vector<AngleRel> angle_rels;
  std::vector<EdgeRel> edge_rels;
  std::vector<FixedAngle> fixed_angles;
};

const std::vector<TypeSpec>& tile_type_table();

// ---- labeled polygons ---------------------------------------------------

template <typename S>
struct LabeledPolygon {
  Polygon<S> polygon;
  size_t offset = 0;       // vertex carrying label A
  bool reflected = false;  // labels run clockwise over the stored cycle
};

namespace detail {

template <typename S>
size_t label_vertex(const LabeledPolygon<S>& lp, size_t slot) {
  size_t n = lp.polygon.size();
  return lp.reflected ? (lp.offset + n - slot % n) % n : (lp.offset + slot) % n;
}

template <typename S>
size_t label_edge(const LabeledPolygon<S>& lp, size_t slot) {
  size_t n = lp.polygon.size();
  // edge slot k ends at vertex slot k
  return lp.reflected ? (lp.offset + n - slot % n) % n
                      : (lp.offset + slot + n - 1) % n;
}

// (cos, sin) of the interior angle at a vertex, scaled by |u||w|
template <typename S>
std::pair<S, S> angle_pair(const Polygon<S>& p, size_t v) {
  size_t n = p.size();
  Vec2<S> u = p.vertex((v + n - 1) % n) - p.vertex(v);
  Vec2<S> w = p.vertex((v + 1) % n) - p.vertex(v);
  S re = dot(u, w);
  S im = cross(u, w);
  if (sgn(im) < 0) im = -im;  // interior angle of a convex vertex is in (0,pi)
  return {re, im};
}

inline double angle_deg(const Polygon<double>& p, size_t v) {
  auto [re, im] = angle_pair(p, v);
  return std::atan2(im, re) * 180.0 / 3.14159265358979323846;
}

// does the complex pair (re, im) point at an angle in (0,180) whose cosine
// has the given sign and squared value?  msq is the squared modulus
inline bool exact_arg_matches_cossq(const Exact& re, const Exact& im,
                                    int cos_sign, const CosSq& cossq) {
  if (im.sign() <= 0) return false;
  if (re.sign() != cos_sign) return false;
  Exact msq = re * re + im * im;
  Exact resq = re * re;
  if (cossq.ext_d == 0) return resq == cossq.qa * msq;
  // resq = (qa + qb*sqrt(d)) * msq, with sqrt(d) outside the scalar field:
  // isolate the radical and square once more
  Exact e = resq - cossq.qa * msq;
  if (e.sign() != cossq.qb.sign()) return false;
  return e * e == cossq.qb * cossq.qb * Exact(cossq.ext_d) * msq * msq;
}

inline bool exact_arg_equals(const Exact& re, const Exact& im, int target_deg,
                             int cos_sign, const CosSq& cossq) {
  int t = ((target_deg % 360) + 360) % 360;
  if (t == 0) return im.sign() == 0 && re.sign() > 0;
  if (t == 180) return im.sign() == 0 && re.sign() < 0;
  if (t == 90) return re.sign() == 0 && im.sign() > 0;
  return exact_arg_matches_cossq(re, im, cos_sign, cossq);
}

// cos^2 and cos sign for the angle-relation targets that occur in the table
inline std::pair<int, CosSq> rel_target_cossq(int target_deg) {
  switch (target_deg) {
    case 60:
      return {1, {Exact::frac(1, 4), Exact(0), 0}};
    case 120:
      return {-1, {Exact::frac(1, 4), Exact(0), 0}};
    case 150:
      return {-1, {Exact::frac(3, 4), Exact(0), 0}};
    default:
      assert(target_deg % 90 == 0);
      return {0, {Exact(0), Exact(0), 0}};
  }
}

template <typename S>
bool eval_angle_rel(const LabeledPolygon<S>& lp, const AngleRel& rel,
                    double tol_deg) {
  size_t n = lp.polygon.size();
  if constexpr (std::is_same_v<S, Exact>) {
    // multiply out unit-direction pairs so the whole relation becomes one
    // exact argument test; negative coefficients contribute conjugates
    Exact pre(1), pim(0);
    for (size_t k = 0; k < n; ++k) {
      int c = rel.coef[k];
      if (c == 0) continue;
      auto [re, im] = angle_pair(lp.polygon, label_vertex(lp, k));
      if (c < 0) im = -im;
      for (int r = 0; r < std::abs(c); ++r) {
        Exact nre = pre * re - pim * im;
        Exact nim = pre * im + pim * re;
        pre = nre;
        pim = nim;
      }
    }
    auto [sign, cossq] = rel_target_cossq(rel.target_deg);
    return exact_arg_equals(pre, pim, rel.target_deg, sign, cossq);
  } else {
    double sum = 0;
    for (size_t k = 0; k < n; ++k) {
      if (rel.coef[k] == 0) continue;
      sum += rel.coef[k] * angle_deg(lp.polygon, label_vertex(lp, k));
    }
    return std::abs(sum - rel.target_deg) <= tol_deg;
  }
}

template <typename S>
bool eval_fixed_angle(const LabeledPolygon<S>& lp, const FixedAngle& fa,
                      double tol_deg) {
  if constexpr (std::is_same_v<S, Exact>) {
    auto [re, im] = angle_pair(lp.polygon, label_vertex(lp, fa.slot));
    if (fa.cos_sign == 0) return re.sign() == 0 && im.sign() > 0;  // 90°
    return exact_arg_matches_cossq(re, im, fa.cos_sign, fa.cossq);
  } else {
    double got = angle_deg(lp.polygon, label_vertex(lp, fa.slot));
    return std::abs(got - fa.target_deg) <= tol_deg;
  }
}

// decide sum(coef_k * sqrt(Lsq_k)) == 0 exactly; at most three active terms
inline bool exact_edge_rel(std::vector<std::pair<int, Exact>> terms) {
  std::vector<std::pair<int, Exact>> pos, neg;
  for (auto& [c, l] : terms) {
    if (c > 0) pos.push_back({c, l});
    else if (c < 0) neg.push_back({-c, l});
  }
  auto side_square = [](const std::vector<std::pair<int, Exact>>& side) {
    // |side| <= 2: (c1*sqrt(L1) + c2*sqrt(L2))^2
    Exact sq(0);
    for (auto& [c, l] : side) sq = sq + Exact(c * c) * l;
    return sq;
  };
  if (pos.empty() && neg.empty()) return true;
  if (pos.empty() || neg.empty()) return false;  // lengths are positive
  assert(pos.size() + neg.size() <= 3);
  if (pos.size() == 1 && neg.size() == 1)
    return Exact(pos[0].first * pos[0].first) * pos[0].second ==
           Exact(neg[0].first * neg[0].first) * neg[0].second;
  // c1*sqrt(L1) = c2*sqrt(L2) + c3*sqrt(L3): square both sides, isolate the
  // leftover radical, square again
  auto& one = pos.size() == 1 ? pos : neg;
  auto& two = pos.size() == 1 ? neg : pos;
  Exact lhs = Exact(one[0].first * one[0].first) * one[0].second;
  Exact e = lhs - side_square(two);
  if (e.sign() < 0) return false;
  Exact c2sq = Exact(two[0].first * two[0].first) * two[0].second;
  Exact c3sq = Exact(two[1].first * two[1].first) * two[1].second;
  return e * e == Exact(4) * c2sq * c3sq;
}

template <typename S>
bool eval_edge_rel(const LabeledPolygon<S>& lp, const EdgeRel& rel,
                   double tol) {
  size_t n = lp.polygon.size();
  if constexpr (std::is_same_v<S, Exact>) {
    std::vector<std::pair<int, Exact>> terms;
    for (size_t k = 0; k < n; ++k)
      if (rel.coef[k] != 0)
        terms.push_back({rel.coef[k], lp.polygon.edge_len_sq(label_edge(lp, k))});
    return exact_edge_rel(std::move(terms));
  } else {
    double sum = 0, longest = 0;
    for (size_t k = 0; k < n; ++k) {
      double len = std::sqrt(lp.polygon.edge_len_sq(label_edge(lp, k)));
      longest = std::max(longest, len);
      sum += rel.coef[k] * len;
    }
    return std::abs(sum) <= tol * std::max(longest, 1e-300);
  }
}

template <typename S>
bool eval_type(const LabeledPolygon<S>& lp, const TypeSpec& spec, double tol) {
  for (const auto& r : spec.angle_rels)
    if (!eval_angle_rel(lp, r, tol)) return false;
  for (const auto& f : spec.fixed_angles)
    if (!eval_fixed_angle(lp, f, tol)) return false;
  for (const auto& r : spec.edge_rels)
    if (!eval_edge_rel(lp, r, tol)) return false;
  return true;
}

}  // namespace detail

// ---- public classification API ------------------------------------------

struct TypeWitness {
  TileTypeId type;
  size_t offset = 0;
  bool reflected = false;
};

struct ClassificationResult {
  std::vector<TileTypeId> types;
  std::vector<TypeWitness> witnesses;
  std::optional<std::string> rejection_reason;

  bool contains(const TileTypeId& t) const {
    for (const auto& x : types)
      if (x == t) return true;
    return false;
  }
};

template <typename S>
bool matches_type(const LabeledPolygon<S>& lp, const TileTypeId& t,
                  double tol = 1e-6) {
  size_t n = lp.polygon.size();
  for (const auto& spec : tile_type_table()) {
    if (spec.id != t) continue;
    if (spec.n != static_cast<int>(n))
      throw ClassifyError(ClassifyError::Kind::ClassMismatch,
                          "polygon has " + std::to_string(n) +
                              " edges, type " + type_name(t) + " needs " +
                              std::to_string(spec.n));
    return detail::eval_type(lp, spec, tol);
  }
  throw ClassifyError(ClassifyError::Kind::UnsupportedType,
                      "unknown type " + type_name(t));
}

template <typename S>
ClassificationResult classify(const Polygon<S>& p, double tol = 1e-6) {
  ClassificationResult res;
  size_t n = p.size();
  if (n >= 7) {
    res.rejection_reason = "SevenOrMoreEdges";
    return res;
  }
  for (const auto& spec : tile_type_table()) {
    if (spec.n != static_cast<int>(n)) continue;
    bool found = false;
    for (int refl = 0; refl < 2 && !found; ++refl)
      for (size_t off = 0; off < n && !found; ++off) {
        LabeledPolygon<S> lp{p, off, refl == 1};
        if (detail::eval_type(lp, spec, tol)) {
          res.types.push_back(spec.id);
          res.witnesses.push_back({spec.id, off, refl == 1});
          found = true;
        }
      }
  }
  return res;
}

inline bool can_tile_edge_to_edge(const ClassificationResult& r) {
  for (const auto& t : r.types) {
    if (t.cls == TileClass::Triangle || t.cls == TileClass::Quadrilateral ||
        t.cls == TileClass::Hexagon)
      return true;
    if (t.cls == TileClass::Pentagon) {
      int k = t.index;
      if (k == 1 || k == 2 || (k >= 4 && k <= 9)) return true;
    }
  }
  return false;
}

}  // namespace tessella
