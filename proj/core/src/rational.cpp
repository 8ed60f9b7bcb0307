#include "biperiodic/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw ParseError("invalid rational '" + std::string(text) + "': expected N, -N or N/D");
    }
  }
  if (!all_digits(num_part)) {
    throw ParseError("invalid rational '" + std::string(text) + "': expected N, -N or N/D");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den = den_part.empty() ? mpz_class(1) : mpz_class(std::string(den_part), 10);
  if (den == 0) {
    throw ParseError("invalid rational '" + std::string(text) + "': zero denominator");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0 && base.is_zero()) {
    throw DivisionByZero("zero raised to a negative power");
  }
  // |INT64_MIN| does not fit; such exponents are far beyond anything representable anyway.
  if (exponent == std::numeric_limits<std::int64_t>::min()) {
    throw InvalidParameter("exponent out of range");
  }
  const auto magnitude = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), magnitude);
  mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), magnitude);
  if (exponent < 0) std::swap(num, den);
  return Rational(num, den);
}

Rational sign_power(std::int64_t n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace biperiodic
