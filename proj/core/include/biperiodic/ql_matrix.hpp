#pragma once

#include <cstdint>

#include "biperiodic/matrix2.hpp"
#include "biperiodic/rational.hpp"
#include "biperiodic/sequences.hpp"

namespace biperiodic {

/// Generating matrix [[a^2 + 2a/b, a^2/b], [a, 2a/b]].
Mat2 build_ql(const SeqParams& p);

enum class Parity { Even, Odd };

/// Q_l^n written as (a/b)^n (ab+4)^floor(n/2) times a matrix of sequence
/// terms: q_{n+1}, q_n, (b/a) q_n, q_{n-1} for even n and the same pattern in
/// l for odd n.
struct ClosedForm {
  std::int64_t n = 0;
  Parity parity = Parity::Even;
  std::int64_t scale_ab_pow = 0;    // exponent of a/b
  std::int64_t scale_abp4_pow = 0;  // exponent of ab+4
  Mat2 core;

  SequenceKind core_kind() const {
    return parity == Parity::Even ? SequenceKind::Fibonacci : SequenceKind::Lucas;
  }

  /// (a/b)^scale_ab_pow (ab+4)^scale_abp4_pow; throws SingularMatrix when a
  /// negative power of ab+4 = 0 is required.
  Rational prefactor(const SeqParams& p) const;
  Mat2 materialize(const SeqParams& p) const;
};

/// Builds the closed form from the recurrence oracle for any integer n.
ClosedForm ql_power_closed_form(const SeqParams& p, std::int64_t n);

/// Q_l^n by binary exponentiation (through the inverse for n < 0).
Mat2 ql_power_direct(const SeqParams& p, std::int64_t n, MulCounter* counter = nullptr);

/// The printed Q_l^{-n} display for n >= 1:
///   n even: (a/b)^{-n} (ab+4)^{-n/2}     [[q_{n-1}, -q_n], [-(b/a) q_n, q_{n+1}]]
///   n odd:  (a/b)^{-n} (ab+4)^{-(n+1)/2} [[l_{n-1}, -l_n], [-(b/a) l_n, l_{n+1}]]
Mat2 ql_inverse_power_formula(const SeqParams& p, std::int64_t n);

/// ((a^2/b^2)(ab+4))^n without forming the matrix.
Rational det_ql_power(const SeqParams& p, std::int64_t n);

struct FastPathStats {
  std::uint64_t multiplications = 0;
  std::int64_t matrix_power = 0;
};

/// q_n or l_n in O(log |n|) products, read off Q_l^m and divided by the
/// closed-form prefactor. Even powers expose q, odd powers expose l; for the
/// other kind the (1,1) entry of Q_l^{n-1} carries t_n. Throws SingularMatrix
/// when ab+4 = 0 and the prefactor (or the inverse) vanishes.
Rational term_fast(const SeqParams& p, SequenceKind kind, std::int64_t n,
                   FastPathStats* stats = nullptr);

}  // namespace biperiodic
