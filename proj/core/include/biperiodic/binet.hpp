#pragma once

#include <cstdint>

#include "biperiodic/matrix2.hpp"
#include "biperiodic/quad_ext.hpp"
#include "biperiodic/sequences.hpp"

namespace biperiodic {

/// Roots of X^2 - abX - ab = 0 in Q(sqrt D), D = a^2 b^2 + 4ab.
struct RootPair {
  QuadExt alpha;
  QuadExt beta;
};

RootPair roots(const SeqParams& p);

/// The two algebraically equivalent scalings in front of (alpha^n - beta^n)/(alpha - beta).
enum class FibPrefactor {
  ParityForm,  // a^{1-eps(n)} / (ab)^{floor(n/2)}
  SplitForm,   // 1 / (a^{floor((n-1)/2)} b^{floor(n/2)})
};

Rational fib_prefactor(const SeqParams& p, std::int64_t n, FibPrefactor form);

/// Full field element before extraction; its sqrt(D) coefficient is zero.
/// Throws DegenerateDiscriminant when D = 0.
QuadExt binet_fib_element(const SeqParams& p, std::int64_t n,
                          FibPrefactor form = FibPrefactor::ParityForm);
QuadExt binet_lucas_element(const SeqParams& p, std::int64_t n);

/// q_n through the Binet formula. Throws DegenerateDiscriminant when D = 0.
Rational binet_fib(const SeqParams& p, std::int64_t n, FibPrefactor form = FibPrefactor::ParityForm);

/// l_n through the Binet formula; defined for D = 0 too (repeated root ab/2).
Rational binet_lucas(const SeqParams& p, std::int64_t n);

/// Eigen-structure of Q_l over Q(sqrt D).
///
/// The eigenvalues are s*alpha and s*(-beta) with s = sqrt(D)/b^2, whose
/// square a(ab+4)/b^3 is the half-power prefactor of the usual display. Columns
/// of `vectors` are (a^2/b, -(a/b) beta) and (a^2/b, -(a/b) alpha).
struct EigenDecomposition {
  QuadExt lambda1;
  QuadExt lambda2;
  QuadMat2 vectors;
};

/// Throws DegenerateDiscriminant when D = 0.
EigenDecomposition eigen_decompose(const SeqParams& p);

/// lambda^2 - (a^2 + 4a/b) lambda + (a^3/b + 4a^2/b^2), evaluated in the field.
QuadExt ql_characteristic_poly(const SeqParams& p, const QuadExt& lambda);

/// Q_l lifted into Q(sqrt D).
QuadMat2 lift(const Mat2& m, const Rational& d);

}  // namespace biperiodic
