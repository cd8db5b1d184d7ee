#pragma once

#include <algorithm>

#include "tessella/scalar.hpp"

namespace tessella {

template <typename S>
struct Vec2 {
  S x{};
  S y{};
};

template <typename S>
Vec2<S> operator+(const Vec2<S>& a, const Vec2<S>& b) {
  return {a.x + b.x, a.y + b.y};
}

template <typename S>
Vec2<S> operator-(const Vec2<S>& a, const Vec2<S>& b) {
  return {a.x - b.x, a.y - b.y};
}

template <typename S>
Vec2<S> operator-(const Vec2<S>& a) {
  return {-a.x, -a.y};
}

template <typename S>
Vec2<S> operator*(const S& k, const Vec2<S>& v) {
  return {k * v.x, k * v.y};
}

template <typename S>
bool operator==(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x == b.x && a.y == b.y;
}

template <typename S>
bool operator!=(const Vec2<S>& a, const Vec2<S>& b) {
  return !(a == b);
}

template <typename S>
S dot(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.x + a.y * b.y;
}

template <typename S>
S cross(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.y - a.y * b.x;
}

template <typename S>
S length_sq(const Vec2<S>& v) {
  return dot(v, v);
}

inline double as_double(double v) { return v; }
inline double as_double(const Exact& v) { return v.to_double(); }

template <typename S>
Vec2<double> as_double(const Vec2<S>& v) {
  return {as_double(v.x), as_double(v.y)};
}

// axis-aligned box in double coordinates, used for cheap rejection only
struct Rect {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;

  void expand(const Vec2<double>& p) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }

  bool intersects(const Rect& o, double margin) const {
    return xmin <= o.xmax + margin && o.xmin <= xmax + margin &&
           ymin <= o.ymax + margin && o.ymin <= ymax + margin;
  }
};

}  // namespace tessella
