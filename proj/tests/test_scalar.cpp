#include "doctest.h"
#include "tessella/scalar.hpp"

#include <cmath>

using namespace tessella;

namespace {
const double PI = 3.14159265358979323846;
}

TEST_CASE("tau satisfies its minimal polynomial") {
  Exact tau = exact_tau();
  CHECK(tau * tau == tau + Exact(1));
  CHECK(Exact(1) / tau == tau - Exact(1));
  CHECK((tau * tau * tau).to_double() == doctest::Approx(4.23606797749979).epsilon(1e-14));
}

TEST_CASE("s36 squares to (5-sqrt5)/8") {
  Exact s = Exact::s36();
  Exact expected(BigRat(5, 8), BigRat(-1, 8), 0, 0);
  CHECK(s * s == expected);
  CHECK(s.in_q_sqrt5() == false);
  CHECK((s * s).in_q_sqrt5() == true);
}

TEST_CASE("to_double against frozen decimal expansions") {
  CHECK(std::abs(Exact::sqrt5().to_double() - 2.2360679774997896) < 1e-15);
  CHECK(std::abs(Exact::s36().to_double() - 0.5877852522924731) < 1e-15);
  Exact c36(BigRat(1, 4), BigRat(1, 4), 0, 0);
  CHECK(std::abs(c36.to_double() - 0.8090169943749475) < 1e-15);
  Exact s18(BigRat(-1, 4), BigRat(1, 4), 0, 0);
  CHECK(std::abs(s18.to_double() - 0.30901699437494745) < 1e-15);
  Exact c18 = Exact::s36() * exact_tau();
  CHECK(std::abs(c18.to_double() - 0.9510565162951535) < 1e-15);
}

TEST_CASE("sign is exact near ties") {
  // 161/72 is a convergent of sqrt5: (161/72)^2 - 5 = 1/5184
  CHECK((Exact::frac(161, 72) - Exact::sqrt5()).sign() == 1);
  CHECK((Exact::sqrt5() - Exact::frac(161, 72)).sign() == -1);
  CHECK((Exact::frac(9, 4) - Exact::sqrt5()).sign() == 1);
  CHECK(Exact(0).sign() == 0);
  CHECK((Exact::sqrt5() - Exact::sqrt5()).sign() == 0);

  // mixed rational / s36 parts with opposite signs force the squaring path
  Exact tau = exact_tau();
  Exact s = Exact::s36();
  CHECK((tau - Exact(2) * s).sign() == 1);       // 1.618... vs 1.175...
  CHECK((Exact(2) * s - tau).sign() == -1);
  CHECK((s * tau - Exact(1)).sign() == -1);      // cos 18 < 1
  CHECK((Exact(1) - s * tau).sign() == 1);
  // cos 18 vs 49/50 + tiny: 0.95105... vs 0.95106
  CHECK((s * tau - Exact::frac(9510656, 10000000)).sign() == -1);
  CHECK((s * tau - Exact::frac(9510565, 10000000)).sign() == 1);
}

TEST_CASE("comparison operators route through exact sign") {
  Exact tau = exact_tau();
  CHECK(tau > Exact(1));
  CHECK(tau < Exact(2));
  CHECK(tau * tau >= tau);
  CHECK(Exact::frac(-1, 3) < Exact(0));
  CHECK(Exact::frac(161, 72) > Exact::sqrt5());
}

TEST_CASE("field arithmetic identities") {
  Exact x(BigRat(3), BigRat(2), BigRat(1), BigRat(-1, 2));
  Exact y(BigRat(1), BigRat(0), BigRat(-1), BigRat(0));
  CHECK((x / y) * y == x);
  CHECK(x - x == Exact(0));
  CHECK(x + (-x) == Exact(0));
  CHECK(x * Exact(1) == x);
  CHECK((x * y) / x == y);
  Exact inv = Exact(1) / x;
  CHECK(x * inv == Exact(1));
  CHECK(std::abs(inv.to_double() - 1.0 / x.to_double()) < 1e-12);
}

TEST_CASE("print and parse round-trip") {
  auto roundtrip = [](const Exact& v) {
    auto back = Exact::parse(v.str());
    REQUIRE(back.has_value());
    CHECK(*back == v);
  };
  roundtrip(Exact(0));
  roundtrip(Exact(7));
  roundtrip(Exact::frac(-3, 2));
  roundtrip(Exact::frac(1, 2) + Exact::frac(3, 4) * Exact::sqrt5());
  roundtrip(Exact::sqrt5());
  roundtrip(-Exact::sqrt5());
  roundtrip(Exact::s36());
  roundtrip(Exact(0, 0, BigRat(-2, 3), BigRat(5, 7)));
  roundtrip(Exact(BigRat(1), BigRat(-1), BigRat(1), BigRat(-1)));

  CHECK((Exact::frac(1, 2) + Exact::frac(3, 4) * Exact::sqrt5()).str() == "1/2+3/4√5");
  CHECK(Exact::sqrt5().str() == "√5");
  CHECK((-Exact::sqrt5()).str() == "-√5");
  CHECK(Exact(0).str() == "0");
  CHECK(Exact::s36().str() == "s36");
  CHECK((Exact::frac(-1, 2) * Exact::s36()).str() == "-1/2s36");
}

TEST_CASE("parse accepts ascii aliases and spaces") {
  CHECK(*Exact::parse("sqrt5") == Exact::sqrt5());
  CHECK(*Exact::parse("1/2 + 3/4sqrt5") == *Exact::parse("1/2+3/4√5"));
  CHECK(*Exact::parse("-s36sqrt5") == Exact(0, 0, 0, BigRat(-1)));
  CHECK(*Exact::parse("2s36") == Exact(2) * Exact::s36());
  CHECK(*Exact::parse("0") == Exact(0));
  CHECK(*Exact::parse("1/2+1/2√5+s36") == exact_tau() + Exact::s36());
  CHECK(*Exact::parse("3-√5") == Exact(3) - Exact::sqrt5());
}

TEST_CASE("parse rejects malformed input") {
  CHECK(!Exact::parse("").has_value());
  CHECK(!Exact::parse("x").has_value());
  CHECK(!Exact::parse("1..2").has_value());
  CHECK(!Exact::parse("1.5").has_value());
  CHECK(!Exact::parse("1/0").has_value());
  CHECK(!Exact::parse("++1").has_value());
  CHECK(!Exact::parse("√7").has_value());
  CHECK(!Exact::parse("1 2").has_value());
  CHECK(!Exact::parse("s36s36").has_value());
}

TEST_CASE("cos and sin tables for multiples of 18 degrees") {
  for (int k = -20; k <= 40; ++k) {
    Exact c = exact_cos_deg18(k);
    Exact s = exact_sin_deg18(k);
    double theta = 18.0 * k * PI / 180.0;
    CHECK(std::abs(c.to_double() - std::cos(theta)) < 1e-12);
    CHECK(std::abs(s.to_double() - std::sin(theta)) < 1e-12);
    CHECK(c * c + s * s == Exact(1));
  }
  CHECK(exact_cos_deg18(5) == Exact(0));
  CHECK(exact_sin_deg18(5) == Exact(1));
  CHECK(exact_cos_deg18(2) == Exact(BigRat(1, 4), BigRat(1, 4), 0, 0));
  CHECK(exact_sin_deg18(2) == Exact::s36());
}

TEST_CASE("float comparisons honor the global tolerance") {
  double saved = tolerance();
  CHECK(sgn(0.0) == 0);
  CHECK(sgn(saved / 2) == 0);
  CHECK(sgn(saved * 2) == 1);
  CHECK(sgn(-saved * 2) == -1);
  set_tolerance(1e-3);
  CHECK(sgn(5e-4) == 0);
  set_tolerance(saved);
  CHECK(sgn(5e-4) == 1);
  CHECK(sgn(Exact::frac(1, 1000000000000L)) == 1);  // exact backend ignores tolerance
}
