#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "biperiodic/rational.hpp"

namespace biperiodic {

/// Validated parameter pair (a, b) with the constants every module needs.
class SeqParams {
 public:
  /// Throws InvalidParameter when a or b is zero.
  SeqParams(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& ab() const { return ab_; }
  const Rational& ab_plus_4() const { return ab_plus_4_; }
  /// D = ab(ab + 4), the radicand under the characteristic roots.
  const Rational& disc() const { return disc_; }

  friend bool operator==(const SeqParams& x, const SeqParams& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_;
  Rational b_;
  Rational ab_;
  Rational ab_plus_4_;
  Rational disc_;
};

enum class SequenceKind { Fibonacci, Lucas };

std::string_view to_string(SequenceKind kind);

/// n - 2*floor(n/2), in {0, 1} for every integer n.
int epsilon(std::int64_t n);

/// floor(n / 2) rounding toward negative infinity.
std::int64_t floor_half(std::int64_t n);

/// Coefficient applied at index n by the forward recurrence: the Fibonacci
/// sequence uses a at even n and b at odd n, the Lucas sequence the reverse.
const Rational& recurrence_coefficient(const SeqParams& p, SequenceKind kind, std::int64_t n);

/// Reference evaluator: q_n or l_n by stepping the recurrence from the seeds,
/// backward for n < 0. Theta(|n|) and deliberately unoptimized.
Rational term_recurrence(const SeqParams& p, SequenceKind kind, std::int64_t n);

/// Terms lo..hi (inclusive) from a single recurrence sweep.
std::vector<Rational> term_range(const SeqParams& p, SequenceKind kind, std::int64_t lo,
                                 std::int64_t hi);

enum class Preset { ClassicalFibonacciLucas, KLucas };

/// classical: a = b = 1. k-lucas: a = b = k, k required and nonzero.
SeqParams preset(Preset name, const std::optional<Rational>& k = std::nullopt);

/// Contiguous window of both sequences for one parameter point; used by the
/// identity evaluators which touch many nearby indices.
class TermWindow {
 public:
  TermWindow(const SeqParams& p, std::int64_t lo, std::int64_t hi);

  const SeqParams& params() const { return params_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

  /// Throws std::out_of_range outside [lo, hi].
  const Rational& q(std::int64_t n) const;
  const Rational& l(std::int64_t n) const;

 private:
  SeqParams params_;
  std::int64_t lo_;
  std::int64_t hi_;
  std::vector<Rational> fib_;
  std::vector<Rational> lucas_;
};

}  // namespace biperiodic
