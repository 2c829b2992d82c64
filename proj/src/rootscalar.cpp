#include "crg/rootscalar.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace crg {

RootScalar::RootScalar(Rational q, long e, long ambient_order)
    : q_(std::move(q)), e_(e), order_(ambient_order) {
  if (order_ < 1) throw ConstraintError("ambient root order must be positive");
  canonicalize();
}

void RootScalar::canonicalize() {
  if (q_.numerator() == 0) {
    q_ = Rational(0);
    e_ = 0;
    return;
  }
  e_ %= order_;
  if (e_ < 0) e_ += order_;
  if (q_ < Rational(0)) {
    if (order_ % 2 != 0)
      throw ConstraintError("cannot fold a sign into an odd ambient root order");
    q_ = -q_;
    e_ = (e_ + order_ / 2) % order_;
  }
}

void RootScalar::check_compatible(const RootScalar& rhs) const {
  if (order_ != rhs.order_)
    throw Error("mixed ambient root orders " + std::to_string(order_) + " and " +
                std::to_string(rhs.order_));
}

long RootScalar::root_order() const {
  if (!is_root_of_unity())
    throw ConstraintError("root_order is defined for unit scalars only, got " + str());
  return order_ / std::gcd(e_, order_);
}

RootScalar RootScalar::operator*(const RootScalar& rhs) const {
  check_compatible(rhs);
  if (is_zero() || rhs.is_zero()) return zero(order_);
  return {q_ * rhs.q_, e_ + rhs.e_, order_};
}

RootScalar RootScalar::operator/(const RootScalar& rhs) const {
  check_compatible(rhs);
  if (rhs.is_zero()) throw ConstraintError("division by zero RootScalar");
  if (is_zero()) return zero(order_);
  return {q_ / rhs.q_, e_ - rhs.e_, order_};
}

RootScalar RootScalar::operator-() const {
  if (is_zero()) return *this;
  return {q_, e_ + order_ / 2, order_};
}

RootScalar RootScalar::inverse() const {
  if (is_zero()) throw ConstraintError("zero RootScalar has no inverse");
  return {Rational(1) / q_, -e_, order_};
}

RootScalar RootScalar::pow(long k) const {
  if (is_zero()) {
    if (k <= 0) throw ConstraintError("0 cannot be raised to a nonpositive power");
    return *this;
  }
  Rational q(1);
  Rational base = k >= 0 ? q_ : Rational(1) / q_;
  long reps = k >= 0 ? k : -k;
  for (long i = 0; i < reps; ++i) q *= base;
  return {q, e_ * k, order_};
}

std::string RootScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (q_ != Rational(1)) {
    os << q_.numerator();
    if (q_.denominator() != 1) os << "/" << q_.denominator();
    if (e_ != 0) os << "*";
  }
  if (e_ != 0) os << "z^" << e_;
  if (q_ == Rational(1) && e_ == 0) os << "1";
  return os.str();
}

std::complex<double> RootScalar::to_complex() const {
  constexpr double tau = 6.283185307179586476925286766559;
  double mag = static_cast<double>(q_.numerator()) / static_cast<double>(q_.denominator());
  return mag * std::polar(1.0, tau * static_cast<double>(e_) / static_cast<double>(order_));
}

}  // namespace crg
