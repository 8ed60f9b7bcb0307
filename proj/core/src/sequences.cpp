#include "biperiodic/sequences.hpp"

#include <stdexcept>
#include <string>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

struct Seeds {
  Rational zero;
  Rational one;
};

Seeds seeds(const SeqParams& p, SequenceKind kind) {
  if (kind == SequenceKind::Fibonacci) return {Rational(0), Rational(1)};
  return {Rational(2), p.a()};
}

}  // namespace

SeqParams::SeqParams(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() || b_.is_zero()) {
    throw InvalidParameter("parameters must be nonzero (a=" + a_.to_string() +
                           ", b=" + b_.to_string() + ")");
  }
  ab_ = a_ * b_;
  ab_plus_4_ = ab_ + Rational(4);
  disc_ = ab_ * ab_plus_4_;
}

std::string_view to_string(SequenceKind kind) {
  return kind == SequenceKind::Fibonacci ? "fib" : "lucas";
}

int epsilon(std::int64_t n) { return static_cast<int>(n - 2 * floor_half(n)); }

std::int64_t floor_half(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

const Rational& recurrence_coefficient(const SeqParams& p, SequenceKind kind, std::int64_t n) {
  const bool even = epsilon(n) == 0;
  if (kind == SequenceKind::Fibonacci) return even ? p.a() : p.b();
  return even ? p.b() : p.a();
}

Rational term_recurrence(const SeqParams& p, SequenceKind kind, std::int64_t n) {
  auto [prev, cur] = seeds(p, kind);  // (t_0, t_1)
  if (n == 0) return prev;
  if (n == 1) return cur;
  if (n > 1) {
    for (std::int64_t k = 2; k <= n; ++k) {
      Rational next = recurrence_coefficient(p, kind, k) * cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Backward: t_{k-2} = t_k - c_k * t_{k-1}, starting from k = 1.
  Rational upper = std::move(cur);   // t_k
  Rational lower = std::move(prev);  // t_{k-1}
  for (std::int64_t k = 1; k - 2 >= n; --k) {
    Rational below = upper - recurrence_coefficient(p, kind, k) * lower;
    upper = std::move(lower);
    lower = std::move(below);
  }
  return lower;
}

std::vector<Rational> term_range(const SeqParams& p, SequenceKind kind, std::int64_t lo,
                                 std::int64_t hi) {
  std::vector<Rational> out;
  if (hi < lo) return out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  out.push_back(term_recurrence(p, kind, lo));
  if (hi == lo) return out;
  out.push_back(term_recurrence(p, kind, lo + 1));
  for (std::int64_t k = lo + 2; k <= hi; ++k) {
    const std::size_t i = out.size();
    out.push_back(recurrence_coefficient(p, kind, k) * out[i - 1] + out[i - 2]);
  }
  return out;
}

SeqParams preset(Preset name, const std::optional<Rational>& k) {
  switch (name) {
    case Preset::ClassicalFibonacciLucas:
      return SeqParams(Rational(1), Rational(1));
    case Preset::KLucas:
      if (!k || k->is_zero()) throw InvalidParameter("k-lucas preset requires a nonzero k");
      return SeqParams(*k, *k);
  }
  throw InvalidParameter("unknown preset");
}

TermWindow::TermWindow(const SeqParams& p, std::int64_t lo, std::int64_t hi)
    : params_(p),
      lo_(lo),
      hi_(hi),
      fib_(term_range(p, SequenceKind::Fibonacci, lo, hi)),
      lucas_(term_range(p, SequenceKind::Lucas, lo, hi)) {}

const Rational& TermWindow::q(std::int64_t n) const {
  if (n < lo_ || n > hi_) {
    throw std::out_of_range("q_" + std::to_string(n) + " outside term window");
  }
  return fib_[static_cast<std::size_t>(n - lo_)];
}

const Rational& TermWindow::l(std::int64_t n) const {
  if (n < lo_ || n > hi_) {
    throw std::out_of_range("l_" + std::to_string(n) + " outside term window");
  }
  return lucas_[static_cast<std::size_t>(n - lo_)];
}

}  // namespace biperiodic
