#include "biperiodic/ql_matrix.hpp"

#include <string>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

std::int64_t magnitude(std::int64_t n) { return n < 0 ? -n : n; }

Rational closed_form_prefactor(const SeqParams& p, std::int64_t n) {
  const std::int64_t abp4_pow = floor_half(n);
  if (abp4_pow < 0 && p.ab_plus_4().is_zero()) {
    throw SingularMatrix("ab+4 = 0: Q_l is singular, negative powers do not exist");
  }
  return pow(p.a() / p.b(), n) * pow(p.ab_plus_4(), abp4_pow);
}

}  // namespace

Mat2 build_ql(const SeqParams& p) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational two_a_over_b = Rational(2) * a / b;
  return {a * a + two_a_over_b, a * a / b, a, two_a_over_b};
}

Rational ClosedForm::prefactor(const SeqParams& p) const {
  if (scale_abp4_pow < 0 && p.ab_plus_4().is_zero()) {
    throw SingularMatrix("ab+4 = 0: prefactor needs a negative power of zero");
  }
  return pow(p.a() / p.b(), scale_ab_pow) * pow(p.ab_plus_4(), scale_abp4_pow);
}

Mat2 ClosedForm::materialize(const SeqParams& p) const { return prefactor(p) * core; }

ClosedForm ql_power_closed_form(const SeqParams& p, std::int64_t n) {
  ClosedForm form;
  form.n = n;
  form.parity = epsilon(n) == 0 ? Parity::Even : Parity::Odd;
  form.scale_ab_pow = n;
  form.scale_abp4_pow = floor_half(n);
  const auto terms = term_range(p, form.core_kind(), n - 1, n + 1);
  form.core = {terms[2], terms[1], p.b() / p.a() * terms[1], terms[0]};
  return form;
}

Mat2 ql_power_direct(const SeqParams& p, std::int64_t n, MulCounter* counter) {
  const Mat2 ql = build_ql(p);
  if (n >= 0) return mat_pow(ql, static_cast<std::uint64_t>(n), counter);
  if (p.ab_plus_4().is_zero()) {
    throw SingularMatrix("ab+4 = 0: Q_l is singular, Q_l^" + std::to_string(n) + " does not exist");
  }
  return mat_pow(mat_inv(ql), static_cast<std::uint64_t>(-n), counter);
}

Mat2 ql_inverse_power_formula(const SeqParams& p, std::int64_t n) {
  if (n < 1) throw InvalidParameter("inverse power formula is stated for n >= 1");
  if (p.ab_plus_4().is_zero()) throw SingularMatrix("ab+4 = 0: Q_l is singular");
  const bool even = epsilon(n) == 0;
  const SequenceKind kind = even ? SequenceKind::Fibonacci : SequenceKind::Lucas;
  const auto t = term_range(p, kind, n - 1, n + 1);
  const std::int64_t abp4_pow = even ? -n / 2 : -(n + 1) / 2;
  const Rational scale = pow(p.a() / p.b(), -n) * pow(p.ab_plus_4(), abp4_pow);
  const Mat2 core{t[0], -t[1], -(p.b() / p.a()) * t[1], t[2]};
  return scale * core;
}

Rational det_ql_power(const SeqParams& p, std::int64_t n) {
  const Rational base = p.a() * p.a() / (p.b() * p.b()) * p.ab_plus_4();
  if (n < 0 && base.is_zero()) throw SingularMatrix("ab+4 = 0: det(Q_l) = 0 has no negative powers");
  return pow(base, n);
}

Rational term_fast(const SeqParams& p, SequenceKind kind, std::int64_t n, FastPathStats* stats) {
  const SequenceKind exposed = epsilon(n) == 0 ? SequenceKind::Fibonacci : SequenceKind::Lucas;
  const bool direct = exposed == kind;
  // Q_l^m = s * [[t_{m+1}, t_m], [.., t_{m-1}]]; read t_n from (1,2) when m = n, from (1,1) when m = n-1.
  const std::int64_t m = direct ? n : n - 1;

  MulCounter counter;
  const Mat2 power = ql_power_direct(p, m, &counter);
  if (stats != nullptr) {
    stats->multiplications = counter.multiplications;
    stats->matrix_power = m;
  }
  const Rational scale = closed_form_prefactor(p, m);
  if (scale.is_zero()) {
    throw SingularMatrix("ab+4 = 0: Q_l is nilpotent, Q_l^" + std::to_string(magnitude(m)) +
                         " carries no term information");
  }
  return (direct ? power.e12 : power.e11) / scale;
}

}  // namespace biperiodic
