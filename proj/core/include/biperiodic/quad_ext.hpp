#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "biperiodic/rational.hpp"

namespace biperiodic {

/// Element u + v*sqrt(d) of Q[x]/(x^2 - d).
///
/// Purely formal in sqrt(d): no square root is ever evaluated, so negative and
/// non-square discriminants work identically. When d is a perfect square the
/// ring has zero divisors; division only requires a nonzero norm.
class QuadExt {
 public:
  QuadExt(Rational u, Rational v, Rational d)
      : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {}

  static QuadExt rational(Rational u, Rational d) { return {std::move(u), Rational(0), std::move(d)}; }
  static QuadExt radical(Rational v, Rational d) { return {Rational(0), std::move(v), std::move(d)}; }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_rational() const { return v_.is_zero(); }

  QuadExt conj() const { return {u_, -v_, d_}; }
  /// u^2 - d v^2
  Rational norm() const { return u_ * u_ - d_ * v_ * v_; }
  /// Throws DivisionByZero when the norm vanishes.
  QuadExt inverse() const;

  QuadExt operator-() const { return {-u_, -v_, d_}; }
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);
  QuadExt& operator*=(const Rational& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
  friend QuadExt operator*(QuadExt lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadExt operator*(const Rational& lhs, QuadExt rhs) { return rhs *= lhs; }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  std::string to_string() const;

 private:
  void require_same_field(const QuadExt& rhs) const;

  Rational u_;
  Rational v_;
  Rational d_;
};

/// x^n by square-and-multiply; negative n goes through inverse().
QuadExt pow(const QuadExt& base, std::int64_t exponent);

std::ostream& operator<<(std::ostream& os, const QuadExt& value);

}  // namespace biperiodic
