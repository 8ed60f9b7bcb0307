#include "biperiodic/quad_ext.hpp"

#include <ostream>

#include "biperiodic/errors.hpp"

namespace biperiodic {

void QuadExt::require_same_field(const QuadExt& rhs) const {
  if (d_ != rhs.d_) {
    throw DiscriminantMismatch("cannot combine elements of Q(sqrt(" + d_.to_string() +
                               ")) and Q(sqrt(" + rhs.d_.to_string() + "))");
  }
}

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DivisionByZero("inverse of zero-norm element " + to_string());
  return {u_ / n, -v_ / n, d_};
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  require_same_field(rhs);
  u_ += rhs.u_;
  v_ += rhs.v_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  require_same_field(rhs);
  u_ -= rhs.u_;
  v_ -= rhs.v_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  require_same_field(rhs);
  Rational u = u_ * rhs.u_ + d_ * v_ * rhs.v_;
  Rational v = u_ * rhs.v_ + v_ * rhs.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

QuadExt& QuadExt::operator*=(const Rational& rhs) {
  u_ *= rhs;
  v_ *= rhs;
  return *this;
}

std::string QuadExt::to_string() const {
  return u_.to_string() + " + " + v_.to_string() + "*sqrt(" + d_.to_string() + ")";
}

QuadExt pow(const QuadExt& base, std::int64_t exponent) {
  QuadExt factor = exponent < 0 ? base.inverse() : base;
  auto remaining = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  QuadExt result = QuadExt::rational(Rational(1), base.d());
  while (remaining != 0) {
    if (remaining & 1U) result *= factor;
    remaining >>= 1U;
    if (remaining != 0) factor *= factor;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& value) {
  return os << value.to_string();
}

}  // namespace biperiodic
