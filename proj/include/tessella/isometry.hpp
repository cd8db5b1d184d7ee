#pragma once

#include "tessella/vec.hpp"

namespace tessella {

// Plane isometry z -> r*z + t, or z -> r*conj(z) + t when reflected, with r a
// unit complex number (rot_c, rot_s).  Keeping the rotation as an exact unit
// complex instead of an angle is what lets the exact backend rotate without
// ever evaluating trig at runtime.
template <typename S>
struct Isometry {
  S rot_c{1};
  S rot_s{0};
  S tx{0};
  S ty{0};
  bool reflected = false;

  static Isometry identity() { return {}; }

  static Isometry translation(const Vec2<S>& t) {
    return {S(1), S(0), t.x, t.y, false};
  }

  static Isometry rotation(const S& c, const S& s) {
    return {c, s, S(0), S(0), false};
  }

  Vec2<S> operator()(const Vec2<S>& p) const {
    S x = p.x;
    S y = reflected ? -p.y : p.y;
    return {rot_c * x - rot_s * y + tx, rot_s * x + rot_c * y + ty};
  }

  Vec2<S> apply_vector(const Vec2<S>& v) const {
    S x = v.x;
    S y = reflected ? -v.y : v.y;
    return {rot_c * x - rot_s * y, rot_s * x + rot_c * y};
  }
};

// a after b: (a*b)(p) = a(b(p))
template <typename S>
Isometry<S> operator*(const Isometry<S>& a, const Isometry<S>& b) {
  S bc = b.rot_c, bs = b.rot_s, btx = b.tx, bty = b.ty;
  if (a.reflected) {  // conjugate b's complex parts through the mirror
    bs = -bs;
    bty = -bty;
  }
  Isometry<S> out;
  out.rot_c = a.rot_c * bc - a.rot_s * bs;
  out.rot_s = a.rot_s * bc + a.rot_c * bs;
  out.tx = a.rot_c * btx - a.rot_s * bty + a.tx;
  out.ty = a.rot_s * btx + a.rot_c * bty + a.ty;
  out.reflected = a.reflected != b.reflected;
  return out;
}

template <typename S>
Isometry<S> inverse(const Isometry<S>& g) {
  Isometry<S> out;
  out.reflected = g.reflected;
  if (!g.reflected) {
    out.rot_c = g.rot_c;
    out.rot_s = -g.rot_s;
    out.tx = -(out.rot_c * g.tx - out.rot_s * g.ty);
    out.ty = -(out.rot_s * g.tx + out.rot_c * g.ty);
  } else {
    out.rot_c = g.rot_c;
    out.rot_s = g.rot_s;
    out.tx = -(g.rot_c * g.tx + g.rot_s * g.ty);
    out.ty = -(g.rot_s * g.tx - g.rot_c * g.ty);
  }
  return out;
}

template <typename S>
bool operator==(const Isometry<S>& a, const Isometry<S>& b) {
  return a.reflected == b.reflected && scalar_eq(a.rot_c, b.rot_c) &&
         scalar_eq(a.rot_s, b.rot_s) && scalar_eq(a.tx, b.tx) &&
         scalar_eq(a.ty, b.ty);
}

}  // namespace tessella
