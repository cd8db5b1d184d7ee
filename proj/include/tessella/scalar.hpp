#pragma once

// Scalar backends for all geometry in tessella.
//
// Two interchangeable scalar types are supported by the templated geometry:
//   * double        -- float64 with a global absolute tolerance (default 1e-9,
//                      overridable via the TESSELLA_TOL environment variable or
//                      set_tolerance()).  All comparisons go through sgn().
//   * Exact         -- an element of the real field Q(sqrt5, s), s = sin 36deg.
//                      Stored as a + b*sqrt5 + (c + d*sqrt5)*s with rational
//                      a,b,c,d and s^2 = (5 - sqrt5)/8.  Equality and sign are
//                      decided exactly, so the field supports decidable
//                      congruence and matching checks.
//
// The field contains cos/sin of every multiple of 18 degrees (cos 36 =
// (1+sqrt5)/4, sin 18 = (sqrt5-1)/4, cos 18 = sin 72 = s*(1+sqrt5)/2, ...),
// which covers Penrose poses and right angles.  No square roots are ever taken
// at runtime: lengths are compared through squared lengths, angles through
// unnormalized complex pairs.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tessella {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------- tolerance

namespace detail {
inline double& tolerance_slot() {
  static double tol = [] {
    if (const char* env = std::getenv("TESSELLA_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0) return v;
    }
    return 1e-9;
  }();
  return tol;
}
}  // namespace detail

inline double tolerance() { return detail::tolerance_slot(); }
inline void set_tolerance(double t) {
  if (t <= 0) throw std::invalid_argument("tolerance must be positive");
  detail::tolerance_slot() = t;
}

// ------------------------------------------------------------------- Exact

class Exact {
 public:
  Exact() = default;
  Exact(int v) : a_(v) {}
  Exact(long v) : a_(v) {}
  Exact(long long v) : a_(BigInt(v)) {}
  explicit Exact(BigRat a) : a_(std::move(a)) {}
  Exact(BigRat a, BigRat b, BigRat c, BigRat d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Exact sqrt5() { return Exact(0, 1, 0, 0); }
  // sin 36 degrees
  static Exact s36() { return Exact(0, 0, 1, 0); }
  static Exact frac(long num, long den) { return Exact(BigRat(num, den)); }

  const BigRat& a() const { return a_; }
  const BigRat& b() const { return b_; }
  const BigRat& c() const { return c_; }
  const BigRat& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
  // true when the sin36 components vanish, i.e. the value lies in Q(sqrt5)
  bool in_q_sqrt5() const { return c_ == 0 && d_ == 0; }

  friend Exact operator+(const Exact& x, const Exact& y) {
    return Exact(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
  }
  friend Exact operator-(const Exact& x, const Exact& y) {
    return Exact(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
  }
  Exact operator-() const { return Exact(-a_, -b_, -c_, -d_); }

  friend Exact operator*(const Exact& x, const Exact& y) {
    // (u1 + v1 s)(u2 + v2 s) = u1 u2 + v1 v2 s^2 + (u1 v2 + v1 u2) s,
    // with s^2 = 5/8 - (1/8) sqrt5 and Q(sqrt5) products expanded inline.
    const BigRat &a1 = x.a_, &b1 = x.b_, &c1 = x.c_, &d1 = x.d_;
    const BigRat &a2 = y.a_, &b2 = y.b_, &c2 = y.c_, &d2 = y.d_;
    BigRat ua = a1 * a2 + 5 * b1 * b2;
    BigRat ub = a1 * b2 + b1 * a2;
    BigRat wa = c1 * c2 + 5 * d1 * d2;  // v1*v2 in Q(sqrt5)
    BigRat wb = c1 * d2 + d1 * c2;
    // (wa + wb sqrt5) * (5 - sqrt5)/8 = (5 wa - 5 wb)/8 ... careful:
    // (wa + wb r)(5 - r)/8 with r = sqrt5, r^2 = 5:
    //   = (5 wa - wa r + 5 wb r - 5 wb)/8 = (5(wa - wb) + (5 wb - wa) r)/8
    BigRat sa = (5 * (wa - wb)) / 8;
    BigRat sb = (5 * wb - wa) / 8;
    BigRat va = a1 * c2 + 5 * b1 * d2 + c1 * a2 + 5 * d1 * b2;
    BigRat vb = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2;
    return Exact(ua + sa, ub + sb, va, vb);
  }

  friend Exact operator/(const Exact& x, const Exact& y) { return x * y.inverse(); }

  Exact& operator+=(const Exact& y) { return *this = *this + y; }
  Exact& operator-=(const Exact& y) { return *this = *this - y; }
  Exact& operator*=(const Exact& y) { return *this = *this * y; }
  Exact& operator/=(const Exact& y) { return *this = *this / y; }

  friend bool operator==(const Exact& x, const Exact& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Exact& x, const Exact& y) { return !(x == y); }
  friend bool operator<(const Exact& x, const Exact& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Exact& x, const Exact& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Exact& x, const Exact& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Exact& x, const Exact& y) { return (x - y).sign() >= 0; }

  Exact inverse() const {
    if (is_zero()) throw std::domain_error("division by zero Exact");
    // 1/(u + v s) = (u - v s)/(u^2 - v^2 s^2); the denominator lies in
    // Q(sqrt5) and is nonzero because s^2 is not a square there.
    Q5 u{a_, b_}, v{c_, d_};
    Q5 den = q5_sub(q5_mul(u, u), q5_mul(q5_mul(v, v), s2()));
    Q5 deninv = q5_inv(den);
    Q5 ru = q5_mul(u, deninv);
    Q5 rv = q5_mul(Q5{-v.a, -v.b}, deninv);
    return Exact(ru.a, ru.b, rv.a, rv.b);
  }

  int sign() const {
    Q5 u{a_, b_}, v{c_, d_};
    int su = q5_sign(u);
    int sv = q5_sign(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // opposite signs: compare u^2 against v^2 s^2 (equality impossible)
    Q5 diff = q5_sub(q5_mul(u, u), q5_mul(q5_mul(v, v), s2()));
    return su * q5_sign(diff);
  }

  double to_double() const {
    static const double r5 = 2.23606797749978969640917366873;
    static const double s = 0.58778525229247312916870595464;
    return a_.convert_to<double>() + b_.convert_to<double>() * r5 +
           (c_.convert_to<double>() + d_.convert_to<double>() * r5) * s;
  }

  // "p/q+r/s√5" style string; sin36 components append "s36" terms.
  std::string str() const;
  static std::optional<Exact> parse(std::string_view text);

 private:
  struct Q5 {
    BigRat a, b;  // a + b*sqrt5
  };
  static Q5 s2() { return Q5{BigRat(5, 8), BigRat(-1, 8)}; }
  static Q5 q5_mul(const Q5& x, const Q5& y) {
    return Q5{x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  static Q5 q5_sub(const Q5& x, const Q5& y) { return Q5{x.a - y.a, x.b - y.b}; }
  static Q5 q5_inv(const Q5& x) {
    BigRat n = x.a * x.a - 5 * x.b * x.b;
    return Q5{x.a / n, -x.b / n};
  }
  static int rat_sign(const BigRat& r) { return r == 0 ? 0 : (r < 0 ? -1 : 1); }
  static int q5_sign(const Q5& x) {
    int sa = rat_sign(x.a);
    int sb = rat_sign(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    BigRat t = x.a * x.a - 5 * x.b * x.b;
    return sa * rat_sign(t);
  }

  BigRat a_, b_, c_, d_;
};

// ------------------------------------------------- generic scalar helpers

inline int sgn(double x) {
  double t = tolerance();
  if (x > t) return 1;
  if (x < -t) return -1;
  return 0;
}
inline int sgn(const Exact& x) { return x.sign(); }

inline bool scalar_eq(double x, double y) { return sgn(x - y) == 0; }
inline bool scalar_eq(const Exact& x, const Exact& y) { return x == y; }

inline double approx(double x) { return x; }
inline double approx(const Exact& x) { return x.to_double(); }

template <class S>
inline S scalar_from_int(long v) {
  return S(v);
}

// cos/sin of k*18 degrees as exact values; k taken mod 20.
Exact exact_cos_deg18(int k);
Exact exact_sin_deg18(int k);

// golden ratio (1+sqrt5)/2
inline Exact exact_tau() { return Exact(BigRat(1, 2), BigRat(1, 2), 0, 0); }

}  // namespace tessella
