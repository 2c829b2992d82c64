#include <doctest.h>

#include <cmath>
#include <random>

#include "crg/rootscalar.hpp"

using namespace crg;

TEST_CASE("canonical form") {
  const long L = 8;
  CHECK(RootScalar(Rational(0), 5, L) == RootScalar::zero(L));
  // negative magnitude folds into a half-turn
  CHECK(RootScalar(Rational(-1), 0, L) == RootScalar::root(4, L));
  CHECK(RootScalar(Rational(-2, 3), 1, L) == RootScalar(Rational(2, 3), 5, L));
  // exponents reduce mod L
  CHECK(RootScalar::root(9, L) == RootScalar::root(1, L));
  CHECK(RootScalar(Rational(1), -1, L) == RootScalar::root(7, L));
  CHECK_THROWS_AS(RootScalar(Rational(-1), 0, 7), ConstraintError);  // odd ambient
}

TEST_CASE("arithmetic round-trips") {
  const long L = 24;
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    auto pick = [&]() {
      long num = static_cast<long>(rng() % 7) - 3;
      long den = 1 + static_cast<long>(rng() % 3);
      long e = static_cast<long>(rng() % L);
      return RootScalar(Rational(num, den), e, L);
    };
    RootScalar a = pick(), b = pick();
    CHECK(a * RootScalar::one(L) == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RootScalar::one(L));
      CHECK(a.pow(3) == a * a * a);
      CHECK(a.pow(-2) == (a * a).inverse());
    }
    CHECK(-(-a) == a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("root orders") {
  CHECK(RootScalar::one(8).root_order() == 1);
  CHECK(RootScalar::root(4, 8).root_order() == 2);   // -1
  CHECK(RootScalar::root(6, 8).root_order() == 4);   // -i
  CHECK(RootScalar::root(1, 24).root_order() == 24);
  CHECK_THROWS_AS(RootScalar(Rational(2), 0, 8).root_order(), ConstraintError);
}

TEST_CASE("mixed ambient orders are rejected") {
  CHECK_THROWS_AS(RootScalar::one(8) * RootScalar::one(12), Error);
}

TEST_CASE("rendering") {
  const long L = 8;
  CHECK(RootScalar::zero(L).str() == "0");
  CHECK(RootScalar::one(L).str() == "1");
  CHECK(RootScalar::root(3, L).str() == "z^3");
  CHECK(RootScalar(Rational(2, 3), 5, L).str() == "2/3*z^5");
  CHECK(RootScalar(Rational(-2), 0, L).str() == "2*z^4");
}

TEST_CASE("complex embedding matches") {
  const long L = 12;
  const RootScalar s(Rational(3, 2), 5, L);
  const auto z = s.to_complex();
  const double angle = 2.0 * M_PI * 5.0 / 12.0;
  CHECK(std::abs(z.real() - 1.5 * std::cos(angle)) < 1e-12);
  CHECK(std::abs(z.imag() - 1.5 * std::sin(angle)) < 1e-12);
}
