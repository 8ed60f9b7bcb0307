#include "biperiodic/binet.hpp"

#include <stdexcept>
#include <string>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

void require_distinct_roots(const SeqParams& p) {
  if (p.disc().is_zero()) {
    throw DegenerateDiscriminant("ab = -4 gives a repeated root (D = 0); alpha - beta vanishes");
  }
}

Rational extract(const QuadExt& value, std::int64_t n) {
  if (!value.is_rational()) {
    throw std::logic_error("Binet value at n=" + std::to_string(n) +
                           " has a nonzero sqrt component: " + value.to_string());
  }
  return value.u();
}

}  // namespace

RootPair roots(const SeqParams& p) {
  const Rational half(1, 2);
  const Rational center = p.ab() * half;
  return {QuadExt(center, half, p.disc()), QuadExt(center, -half, p.disc())};
}

Rational fib_prefactor(const SeqParams& p, std::int64_t n, FibPrefactor form) {
  if (form == FibPrefactor::ParityForm) {
    return pow(p.a(), 1 - epsilon(n)) / pow(p.ab(), floor_half(n));
  }
  return Rational(1) / (pow(p.a(), floor_half(n - 1)) * pow(p.b(), floor_half(n)));
}

QuadExt binet_fib_element(const SeqParams& p, std::int64_t n, FibPrefactor form) {
  require_distinct_roots(p);
  const auto [alpha, beta] = roots(p);
  const QuadExt ratio = (pow(alpha, n) - pow(beta, n)) / (alpha - beta);
  return fib_prefactor(p, n, form) * ratio;
}

QuadExt binet_lucas_element(const SeqParams& p, std::int64_t n) {
  const auto [alpha, beta] = roots(p);
  const Rational scale = Rational(1) / (pow(p.a(), floor_half(n)) * pow(p.b(), floor_half(n + 1)));
  return scale * (pow(alpha, n) + pow(beta, n));
}

Rational binet_fib(const SeqParams& p, std::int64_t n, FibPrefactor form) {
  return extract(binet_fib_element(p, n, form), n);
}

Rational binet_lucas(const SeqParams& p, std::int64_t n) {
  return extract(binet_lucas_element(p, n), n);
}

QuadMat2 lift(const Mat2& m, const Rational& d) {
  return {QuadExt::rational(m.e11, d), QuadExt::rational(m.e12, d), QuadExt::rational(m.e21, d),
          QuadExt::rational(m.e22, d)};
}

EigenDecomposition eigen_decompose(const SeqParams& p) {
  require_distinct_roots(p);
  const auto [alpha, beta] = roots(p);
  const Rational& a = p.a();
  const Rational& b = p.b();
  const QuadExt scale = QuadExt::radical(Rational(1) / (b * b), p.disc());
  const QuadExt top = QuadExt::rational(a * a / b, p.disc());
  const Rational a_over_b = a / b;
  return {scale * alpha, scale * -beta,
          QuadMat2{top, top, -(a_over_b * beta), -(a_over_b * alpha)}};
}

QuadExt ql_characteristic_poly(const SeqParams& p, const QuadExt& lambda) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational linear = a * a + Rational(4) * a / b;
  const Rational constant = a * a * a / b + Rational(4) * a * a / (b * b);
  return lambda * lambda - linear * lambda + QuadExt::rational(constant, lambda.d());
}

}  // namespace biperiodic
