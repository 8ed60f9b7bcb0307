#include <chrono>

#include <gtest/gtest.h>

#include "biperiodic/errors.hpp"
#include "biperiodic/ql_matrix.hpp"
#include "oracles.hpp"

using biperiodic::Mat2;
using biperiodic::Rational;
using biperiodic::SeqParams;
using biperiodic::SequenceKind;

namespace {

const SeqParams kTwoThree(Rational(2), Rational(3));

/// {+-1, +-2, 3, 1/2, 5/3}^2
std::vector<SeqParams> matrix_grid() {
  const std::vector<Rational> values{Rational(1), Rational(-1), Rational(2), Rational(-2),
                                     Rational(3), Rational(1, 2), Rational(5, 3)};
  std::vector<SeqParams> grid;
  for (const auto& a : values) {
    for (const auto& b : values) grid.emplace_back(a, b);
  }
  return grid;
}

Mat2 brute_power(const SeqParams& p, int n) {
  return biperiodic::testing::repeated_product(biperiodic::build_ql(p), n);
}

}  // namespace

TEST(BuildQl, Entries) {
  const Mat2 expected{Rational(16, 3), Rational(4, 3), Rational(2), Rational(4, 3)};
  EXPECT_EQ(biperiodic::build_ql(kTwoThree), expected);
  const Mat2 lucas_q{Rational(3), Rational(1), Rational(1), Rational(2)};
  EXPECT_EQ(biperiodic::build_ql(SeqParams(Rational(1), Rational(1))), lucas_q);
  EXPECT_EQ(biperiodic::build_ql(kTwoThree).det(), Rational(40, 9));
}

TEST(ClosedForm, FirstTwoPowers) {
  const auto one = biperiodic::ql_power_closed_form(kTwoThree, 1);
  EXPECT_EQ(one.parity, biperiodic::Parity::Odd);
  EXPECT_EQ(one.scale_ab_pow, 1);
  EXPECT_EQ(one.scale_abp4_pow, 0);
  // [[l_2, l_1], [(b/a) l_1, l_0]] = [[8, 2], [3, 2]]
  EXPECT_EQ(one.core, (Mat2{Rational(8), Rational(2), Rational(3), Rational(2)}));
  EXPECT_EQ(one.materialize(kTwoThree), biperiodic::build_ql(kTwoThree));

  const auto two = biperiodic::ql_power_closed_form(kTwoThree, 2);
  EXPECT_EQ(two.parity, biperiodic::Parity::Even);
  EXPECT_EQ(two.scale_ab_pow, 2);
  EXPECT_EQ(two.scale_abp4_pow, 1);
  // [[q_3, q_2], [(b/a) q_2, q_1]] = [[7, 2], [3, 1]]
  EXPECT_EQ(two.core, (Mat2{Rational(7), Rational(2), Rational(3), Rational(1)}));
  EXPECT_EQ(two.prefactor(kTwoThree), Rational(40, 9));
  const Mat2 expected{Rational(280, 9), Rational(80, 9), Rational(40, 3), Rational(40, 9)};
  EXPECT_EQ(two.materialize(kTwoThree), expected);
}

TEST(ClosedForm, SymbolicSecondPower) {
  // Q_l^2 entries a^4 + 5a^3/b + 4a^2/b^2, a^4/b + 4a^3/b^2, a^3 + 4a^2/b, a^3/b + 4a^2/b^2.
  const SeqParams p(Rational(-5, 7), Rational(4, 3));
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Mat2 symbolic{pow(a, 4) + Rational(5) * pow(a, 3) / b + Rational(4) * a * a / (b * b),
                      pow(a, 4) / b + Rational(4) * pow(a, 3) / (b * b),
                      pow(a, 3) + Rational(4) * a * a / b,
                      pow(a, 3) / b + Rational(4) * a * a / (b * b)};
  EXPECT_EQ(biperiodic::ql_power_closed_form(p, 2).materialize(p), symbolic);
  EXPECT_EQ(biperiodic::ql_power_direct(p, 2), symbolic);
}

TEST(QlPowerDirect, Examples) {
  EXPECT_EQ(biperiodic::ql_power_direct(kTwoThree, 0), biperiodic::identity2());
  const Mat2 inverse{Rational(3, 10), Rational(-3, 10), Rational(-9, 20), Rational(6, 5)};
  EXPECT_EQ(biperiodic::ql_power_direct(kTwoThree, -1), inverse);
  EXPECT_EQ(biperiodic::ql_inverse_power_formula(kTwoThree, 1), inverse);
  const SeqParams singular(Rational(1), Rational(-4));
  EXPECT_THROW(biperiodic::ql_power_direct(singular, -2), biperiodic::SingularMatrix);
  EXPECT_THROW(biperiodic::ql_inverse_power_formula(singular, 2), biperiodic::SingularMatrix);
}

TEST(QlPowerDirect, NilpotentWhenAbPlusFourVanishes) {
  const SeqParams singular(Rational(1), Rational(-4));
  const Mat2 zero{Rational(0), Rational(0), Rational(0), Rational(0)};
  EXPECT_EQ(biperiodic::ql_power_direct(singular, 2), zero);
  EXPECT_EQ(biperiodic::ql_power_closed_form(singular, 5).materialize(singular), zero);
}

TEST(DetQlPower, Examples) {
  EXPECT_EQ(biperiodic::det_ql_power(kTwoThree, 1), Rational(40, 9));
  EXPECT_EQ(biperiodic::det_ql_power(kTwoThree, 2), Rational(1600, 81));
  const SeqParams classical(Rational(1), Rational(1));
  EXPECT_EQ(biperiodic::det_ql_power(classical, 3), Rational(125));
  EXPECT_EQ(brute_power(classical, 3).det(), Rational(125));
  EXPECT_EQ(brute_power(kTwoThree, 2).det(), Rational(1600, 81));
}

TEST(TermFast, Examples) {
  EXPECT_EQ(biperiodic::term_fast(kTwoThree, SequenceKind::Fibonacci, 5), Rational(55));
  EXPECT_EQ(biperiodic::term_fast(kTwoThree, SequenceKind::Lucas, 5), Rational(142));
  EXPECT_EQ(biperiodic::term_fast(SeqParams(Rational(1), Rational(1)), SequenceKind::Lucas, 7),
            Rational(29));
}

TEST(TermFast, SingularParameters) {
  const SeqParams singular(Rational(1), Rational(-4));
  // Only indices readable from Q_l^0 or Q_l^1 survive; lucas 0 needs Q_l^-1.
  for (std::int64_t n = 1; n <= 2; ++n) {
    EXPECT_EQ(biperiodic::term_fast(singular, SequenceKind::Lucas, n),
              biperiodic::term_recurrence(singular, SequenceKind::Lucas, n));
  }
  EXPECT_EQ(biperiodic::term_fast(singular, SequenceKind::Fibonacci, 1), Rational(1));
  EXPECT_THROW(biperiodic::term_fast(singular, SequenceKind::Fibonacci, 4), biperiodic::SingularMatrix);
  EXPECT_THROW(biperiodic::term_fast(singular, SequenceKind::Lucas, 0), biperiodic::SingularMatrix);
  EXPECT_THROW(biperiodic::term_fast(singular, SequenceKind::Lucas, -3), biperiodic::SingularMatrix);
}

TEST(QlMatrixProperty, ClosedFormMatchesBinaryPower) {
  for (const auto& p : matrix_grid()) {
    for (std::int64_t n = 1; n <= 64; ++n) {
      ASSERT_EQ(biperiodic::ql_power_closed_form(p, n).materialize(p),
                biperiodic::ql_power_direct(p, n))
          << "a=" << p.a() << " b=" << p.b() << " n=" << n;
    }
  }
}

TEST(QlMatrixProperty, ClosedFormHoldsForNegativePowers) {
  for (const auto& p : matrix_grid()) {
    if (p.ab_plus_4().is_zero()) continue;
    for (std::int64_t n = -20; n <= 0; ++n) {
      ASSERT_EQ(biperiodic::ql_power_closed_form(p, n).materialize(p),
                biperiodic::ql_power_direct(p, n))
          << "a=" << p.a() << " b=" << p.b() << " n=" << n;
    }
  }
}

TEST(QlMatrixProperty, BinaryPowerMatchesRepeatedProduct) {
  for (const auto& p : matrix_grid()) {
    for (int n = 0; n <= 20; ++n) {
      ASSERT_EQ(biperiodic::ql_power_direct(p, n), brute_power(p, n));
    }
  }
}

TEST(QlMatrixProperty, DeterminantOfPowers) {
  for (const auto& p : matrix_grid()) {
    for (std::int64_t n = 1; n <= 32; ++n) {
      ASSERT_EQ(biperiodic::ql_power_direct(p, n).det(), biperiodic::det_ql_power(p, n));
    }
  }
}

TEST(QlMatrixProperty, InversePowers) {
  for (const auto& p : matrix_grid()) {
    if (p.ab_plus_4().is_zero()) continue;
    for (std::int64_t n = -16; n <= 16; ++n) {
      ASSERT_EQ(biperiodic::ql_power_direct(p, n) * biperiodic::ql_power_direct(p, -n),
                biperiodic::identity2());
    }
    for (std::int64_t n = 1; n <= 20; ++n) {
      ASSERT_EQ(biperiodic::ql_inverse_power_formula(p, n), biperiodic::ql_power_direct(p, -n))
          << "a=" << p.a() << " b=" << p.b() << " n=" << n;
    }
  }
}

TEST(QlMatrixProperty, TermFastMatchesRecurrence) {
  const std::vector<SeqParams> params{kTwoThree, SeqParams(Rational(1, 2), Rational(-3, 2)),
                                      SeqParams(Rational(-1), Rational(1))};
  for (const auto& p : params) {
    for (auto kind : {SequenceKind::Fibonacci, SequenceKind::Lucas}) {
      const auto oracle = biperiodic::term_range(p, kind, -1000, 1000);
      for (std::int64_t n = -1000; n <= 1000; n += (n > -20 && n < 20) ? 1 : 37) {
        ASSERT_EQ(biperiodic::term_fast(p, kind, n), oracle[static_cast<std::size_t>(n + 1000)])
            << "a=" << p.a() << " b=" << p.b() << " n=" << n;
      }
    }
  }
}

TEST(QlMatrixProperty, ClassicalDegeneration) {
  const SeqParams p(Rational(1), Rational(1));
  const auto fib = biperiodic::testing::classical(false, 31);
  const auto lucas = biperiodic::testing::classical(true, 31);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(biperiodic::term_fast(p, SequenceKind::Fibonacci, n).to_string(),
              biperiodic::testing::int128_str(fib[n]));
    EXPECT_EQ(biperiodic::term_fast(p, SequenceKind::Lucas, n).to_string(),
              biperiodic::testing::int128_str(lucas[n]));
  }
  // Q_L^n = 5^{floor(n/2)} [[F_{n+1}, F_n], [F_n, F_{n-1}]] (even) or with L (odd).
  for (int n = 1; n <= 30; ++n) {
    const auto& t = (n % 2 == 0) ? fib : lucas;
    const Rational scale = pow(Rational(5), n / 2);
    const Mat2 structured{Rational::parse(biperiodic::testing::int128_str(t[n + 1])),
                          Rational::parse(biperiodic::testing::int128_str(t[n])),
                          Rational::parse(biperiodic::testing::int128_str(t[n])),
                          Rational::parse(biperiodic::testing::int128_str(t[n - 1]))};
    EXPECT_EQ(biperiodic::ql_power_direct(p, n), scale * structured) << "n=" << n;
  }
}

TEST(TermFast, LogarithmicMultiplicationCount) {
  biperiodic::FastPathStats stats;
  const auto start = std::chrono::steady_clock::now();
  const Rational fast = biperiodic::term_fast(kTwoThree, SequenceKind::Fibonacci, 10000, &stats);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(fast, biperiodic::term_recurrence(kTwoThree, SequenceKind::Fibonacci, 10000));
  // ceil(log2(10001)) = 14
  EXPECT_LE(stats.multiplications, 2U * 14U + 2U);
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 1.0);
}

TEST(QlMatrixProperty, SylvesterFibonacciMatrix) {
  const Mat2 q{Rational(1), Rational(1), Rational(1), Rational(0)};
  const auto fib = biperiodic::testing::classical(false, 31);
  auto r = [](__int128 v) { return Rational::parse(biperiodic::testing::int128_str(v)); };
  for (std::uint64_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(biperiodic::mat_pow(q, n), (Mat2{r(fib[n + 1]), r(fib[n]), r(fib[n]), r(fib[n - 1])}));
  }
}
