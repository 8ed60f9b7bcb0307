#include "biperiodic/matrix2.hpp"

#include <optional>
#include <ostream>

namespace biperiodic {

Mat2 identity2() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

Mat2 mat_pow(const Mat2& m, std::uint64_t n, MulCounter* counter) {
  auto multiply = [counter](const Mat2& x, const Mat2& y) {
    if (counter != nullptr) ++counter->multiplications;
    return x * y;
  };
  // The accumulator starts empty so that the first factor is copied, not multiplied by I.
  std::optional<Mat2> result;
  Mat2 square = m;
  while (n != 0) {
    if (n & 1U) result = result ? multiply(*result, square) : square;
    n >>= 1U;
    if (n != 0) square = multiply(square, square);
  }
  return result ? *result : identity2();
}

Mat2 mat_inv(const Mat2& m) {
  const Rational det = m.det();
  if (det.is_zero()) throw SingularMatrix("matrix " + to_string(m) + " has zero determinant");
  return {m.e22 / det, -m.e12 / det, -m.e21 / det, m.e11 / det};
}

QuadMat2 mat_inv(const QuadMat2& m) {
  const QuadExt det = m.det();
  if (det.is_zero()) throw SingularMatrix("matrix over Q(sqrt d) has zero determinant");
  const QuadExt inv = det.inverse();
  return {m.e22 * inv, -m.e12 * inv, -m.e21 * inv, m.e11 * inv};
}

std::string to_string(const Mat2& m) {
  return "[[" + m.e11.to_string() + "," + m.e12.to_string() + "],[" + m.e21.to_string() + "," +
         m.e22.to_string() + "]]";
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << to_string(m); }

}  // namespace biperiodic
