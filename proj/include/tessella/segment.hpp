#pragma once

#include "tessella/vec.hpp"

namespace tessella {

// sign of the turn a -> b -> c (positive = counterclockwise)
template <typename S>
int orientation(const Vec2<S>& a, const Vec2<S>& b, const Vec2<S>& c) {
  return sgn(cross(b - a, c - a));
}

// p on the closed segment [a, b]; assumes nothing about collinearity
template <typename S>
bool on_segment(const Vec2<S>& a, const Vec2<S>& b, const Vec2<S>& p) {
  if (orientation(a, b, p) != 0) return false;
  Vec2<S> ab = b - a;
  S t = dot(p - a, ab);
  return sgn(t) >= 0 && sgn(length_sq(ab) - t) >= 0;
}

// p strictly between a and b
template <typename S>
bool on_segment_interior(const Vec2<S>& a, const Vec2<S>& b, const Vec2<S>& p) {
  if (orientation(a, b, p) != 0) return false;
  Vec2<S> ab = b - a;
  S t = dot(p - a, ab);
  return sgn(t) > 0 && sgn(length_sq(ab) - t) > 0;
}

// closed intersection test, including collinear overlap and shared endpoints
template <typename S>
bool segments_intersect(const Vec2<S>& a, const Vec2<S>& b, const Vec2<S>& c,
                        const Vec2<S>& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

// true when the segments cross at a single point interior to both
template <typename S>
bool segments_properly_intersect(const Vec2<S>& a, const Vec2<S>& b,
                                 const Vec2<S>& c, const Vec2<S>& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// collinear segments sharing a positive-length stretch
template <typename S>
bool segments_overlap_collinear(const Vec2<S>& a, const Vec2<S>& b,
                                const Vec2<S>& c, const Vec2<S>& d) {
  if (orientation(a, b, c) != 0 || orientation(a, b, d) != 0) return false;
  Vec2<S> ab = b - a;
  S t0 = dot(c - a, ab);
  S t1 = dot(d - a, ab);
  if (sgn(t1 - t0) < 0) std::swap(t0, t1);
  S lo = sgn(t0) > 0 ? t0 : S(0);
  S len = length_sq(ab);
  S hi = sgn(len - t1) > 0 ? t1 : len;
  return sgn(hi - lo) > 0;
}

}  // namespace tessella
