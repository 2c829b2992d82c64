#pragma once

#include <boost/rational.hpp>
#include <complex>
#include <string>

#include "crg/errors.hpp"

namespace crg {

using Rational = boost::rational<long long>;

// Exact scalar q * zeta_L^e with q rational and zeta_L = exp(2*pi*i/L).
//
// Canonical form makes equality a component comparison:
//   q == 0  =>  e == 0;
//   q > 0 otherwise (a negative sign is folded into e via zeta_L^{L/2},
//   which requires the ambient order L to be even -- every ambient order
//   used by the monomial engine is).
class RootScalar {
public:
  RootScalar(Rational q, long e, long ambient_order);

  static RootScalar zero(long ambient_order) { return {Rational(0), 0, ambient_order}; }
  static RootScalar one(long ambient_order) { return {Rational(1), 0, ambient_order}; }
  static RootScalar root(long e, long ambient_order) { return {Rational(1), e, ambient_order}; }

  const Rational& q() const { return q_; }
  long exponent() const { return e_; }
  long ambient_order() const { return order_; }

  bool is_zero() const { return q_.numerator() == 0; }
  bool is_one() const { return q_ == Rational(1) && e_ == 0; }
  bool is_root_of_unity() const { return q_ == Rational(1); }

  // Multiplicative order of the represented root of unity; requires q == 1.
  long root_order() const;

  RootScalar operator*(const RootScalar& rhs) const;
  RootScalar operator/(const RootScalar& rhs) const;
  RootScalar operator-() const;
  RootScalar inverse() const;
  RootScalar pow(long k) const;

  friend bool operator==(const RootScalar& a, const RootScalar& b) {
    return a.order_ == b.order_ && a.q_ == b.q_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RootScalar& a, const RootScalar& b) { return !(a == b); }

  std::string str() const;  // "0", "1", "z^3", "2/3*z^5", ...
  std::complex<double> to_complex() const;

private:
  Rational q_;
  long e_;
  long order_;

  void canonicalize();
  void check_compatible(const RootScalar& rhs) const;
};

}  // namespace crg
