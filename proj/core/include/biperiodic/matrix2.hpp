#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "biperiodic/errors.hpp"
#include "biperiodic/quad_ext.hpp"
#include "biperiodic/rational.hpp"

namespace biperiodic {

/// Row-major 2x2 matrix [[e11, e12], [e21, e22]] over an exact scalar.
template <class Scalar>
struct Matrix2 {
  Scalar e11;
  Scalar e12;
  Scalar e21;
  Scalar e22;

  Scalar det() const { return e11 * e22 - e12 * e21; }
  Scalar trace() const { return e11 + e22; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
            x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
  }

  friend Matrix2 operator*(const Rational& s, const Matrix2& m) {
    return {s * m.e11, s * m.e12, s * m.e21, s * m.e22};
  }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

using Mat2 = Matrix2<Rational>;
using QuadMat2 = Matrix2<QuadExt>;

Mat2 identity2();

/// Counts 2x2 products performed by mat_pow.
struct MulCounter {
  std::uint64_t multiplications = 0;
};

/// m^n by square-and-multiply, n >= 0. Uses at most 2*ceil(log2(n+1)) - 1
/// products (none for n = 0 or n = 1).
Mat2 mat_pow(const Mat2& m, std::uint64_t n, MulCounter* counter = nullptr);

/// Throws SingularMatrix when det(m) = 0.
Mat2 mat_inv(const Mat2& m);

/// Inverse over Q[sqrt d]; throws SingularMatrix when the determinant is zero.
QuadMat2 mat_inv(const QuadMat2& m);

std::string to_string(const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace biperiodic
