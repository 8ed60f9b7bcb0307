#include <algorithm>

#include <gtest/gtest.h>

#include "biperiodic/errors.hpp"
#include "biperiodic/identities.hpp"
#include "biperiodic/ql_matrix.hpp"

using biperiodic::GridSpec;
using biperiodic::IdentityId;
using biperiodic::Rational;
using biperiodic::SeqParams;
using biperiodic::Sides;

namespace {

const SeqParams kTwoThree(Rational(2), Rational(3));

void expect_sides(const Sides& s, const Rational& lhs, const Rational& rhs) {
  EXPECT_EQ(s.lhs, lhs);
  EXPECT_EQ(s.rhs, rhs);
}

}  // namespace

TEST(Cassini, FibonacciExamples) {
  expect_sides(biperiodic::cassini_fib(kTwoThree, 2), Rational(2), Rational(2));
  for (const auto& p : {kTwoThree, SeqParams(Rational(-3, 2), Rational(1, 2))}) {
    expect_sides(biperiodic::cassini_fib(p, 1), -p.a(), -p.a());
  }
  expect_sides(biperiodic::cassini_fib(SeqParams(Rational(1), Rational(1)), 6), Rational(1),
               Rational(1));
}

TEST(Cassini, LucasExamples) {
  expect_sides(biperiodic::cassini_lucas(kTwoThree, 1), Rational(10), Rational(10));
  const SeqParams p(Rational(5, 3), Rational(-1, 2));
  expect_sides(biperiodic::cassini_lucas(p, 2), -p.ab_plus_4(), -p.ab_plus_4());
  expect_sides(biperiodic::cassini_lucas(SeqParams(Rational(1), Rational(1)), 4), Rational(-5),
               Rational(-5));
}

TEST(Cassini, PrintedVariantFailsAtOddIndex) {
  const Sides s = biperiodic::cassini_fib_printed_variant(kTwoThree, 3);
  EXPECT_FALSE(s.holds());
  EXPECT_TRUE(biperiodic::cassini_fib(kTwoThree, 3).holds());
  // Coincides with the canonical form when a = b = 1.
  EXPECT_TRUE(biperiodic::cassini_fib_printed_variant(SeqParams(Rational(1), Rational(1)), 3).holds());
}

TEST(Thm6, Examples) {
  const SeqParams p(Rational(7, 5), Rational(-2, 3));
  const Rational& a = p.a();
  const Rational& ab = p.ab();
  const Sides i = biperiodic::thm6_eval(p, IdentityId::Thm6i, 0, 0);
  expect_sides(i, a * (ab + Rational(4)), a * (ab + Rational(4)));
  expect_sides(biperiodic::thm6_eval(p, IdentityId::Thm6v, 1, 1), Rational(0), Rational(0));
  const Sides printed = biperiodic::thm6_eval(p, IdentityId::Thm6viPrinted, 1, 0);
  const Rational l3 = a * a * p.b() + Rational(3) * a;
  expect_sides(printed, l3, -l3);
  expect_sides(biperiodic::thm6_eval(p, IdentityId::Thm6viCorrected, 1, 0), l3, l3);
}

TEST(Thm6, RejectsOtherIds) {
  EXPECT_THROW(biperiodic::thm6_eval(kTwoThree, IdentityId::AddQQ, 0, 0), std::invalid_argument);
}

TEST(AdditionSubtraction, Examples) {
  const SeqParams p(Rational(-3, 2), Rational(5));
  const Rational& a = p.a();
  const Rational& ab = p.ab();
  const Rational q4 = a * a * p.b() + Rational(2) * a;
  expect_sides(biperiodic::addition_eval(p, IdentityId::AddQQ, 2, 2), q4, q4);
  const Rational ll = a * (ab + Rational(2)) + Rational(2) * a;
  expect_sides(biperiodic::addition_eval(p, IdentityId::AddLL, 1, 1), p.ab_plus_4() * a, ll);
  const Rational l3 = a * a * p.b() + Rational(3) * a;
  expect_sides(biperiodic::addition_eval(p, IdentityId::AddLQ, 1, 2), l3, l3);

  expect_sides(biperiodic::subtraction_eval(kTwoThree, IdentityId::SubQQ, 4, 2), Rational(2),
               Rational(2));
  expect_sides(biperiodic::subtraction_eval(kTwoThree, IdentityId::SubLL, 3, 1), Rational(20),
               Rational(20));
  expect_sides(biperiodic::subtraction_eval(p, IdentityId::SubQL, 2, 1), a, a);
}

TEST(AdditionSubtraction, ParityDomains) {
  EXPECT_THROW(biperiodic::addition_eval(kTwoThree, IdentityId::AddQQ, 1, 2), biperiodic::ParityMismatch);
  EXPECT_THROW(biperiodic::addition_eval(kTwoThree, IdentityId::AddLL, 2, 1), biperiodic::ParityMismatch);
  EXPECT_THROW(biperiodic::addition_eval(kTwoThree, IdentityId::AddLQ, 2, 2), biperiodic::ParityMismatch);
  EXPECT_THROW(biperiodic::subtraction_eval(kTwoThree, IdentityId::SubQQ, 3, 3), biperiodic::ParityMismatch);
  EXPECT_THROW(biperiodic::subtraction_eval(kTwoThree, IdentityId::SubLL, 2, 2), biperiodic::ParityMismatch);
  // The mixed subtraction identity holds only for even m, odd n.
  EXPECT_THROW(biperiodic::subtraction_eval(kTwoThree, IdentityId::SubQL, 3, 2), biperiodic::ParityMismatch);
  EXPECT_TRUE(biperiodic::parity_valid(IdentityId::SubQL, -2, -1));
  EXPECT_TRUE(biperiodic::parity_valid(IdentityId::AddLQ, -3, 4));
  EXPECT_TRUE(biperiodic::parity_valid(IdentityId::AddLQ, 4, -3));
}

TEST(IdentityCatalog, NamesRoundTrip) {
  EXPECT_EQ(biperiodic::all_identities().size(), 21U);
  for (IdentityId id : biperiodic::all_identities()) {
    EXPECT_EQ(biperiodic::parse_identity(biperiodic::to_string(id)), id);
  }
  EXPECT_THROW(biperiodic::parse_identity("thm7"), biperiodic::ParseError);
  EXPECT_EQ(biperiodic::expectation(IdentityId::Thm6viPrinted), biperiodic::Expectation::SignErratum);
  EXPECT_EQ(biperiodic::expectation(IdentityId::Thm4iPrinted), biperiodic::Expectation::Discrepancy);
}

TEST(IndexRange, Parse) {
  const auto r = biperiodic::IndexRange::parse("-3..12");
  EXPECT_EQ(r.lo, -3);
  EXPECT_EQ(r.hi, 12);
  EXPECT_EQ(r.to_string(), "-3..12");
  for (const char* bad : {"", "3", "1..", "..2", "5..1", "a..b", "1...2", "1..2x"}) {
    EXPECT_THROW(biperiodic::IndexRange::parse(bad), biperiodic::ParseError) << bad;
  }
}

TEST(VerifyGrid, CassiniSmallGrid) {
  const GridSpec grid{{Rational(1), Rational(2)}, {Rational(1), Rational(3)}, {1, 50}, std::nullopt};
  const auto report = biperiodic::verify_grid(IdentityId::CassiniFib, grid);
  EXPECT_EQ(report.checked, 200U);
  EXPECT_EQ(report.passed, 200U);
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_TRUE(report.matches_expectation());
}

TEST(VerifyGrid, SignErratumSignature) {
  const GridSpec grid{{Rational(1), Rational(2)}, {Rational(1), Rational(3)}, {0, 5}, {{0, 5}}};
  const auto report = biperiodic::verify_grid(IdentityId::Thm6viPrinted, grid);
  EXPECT_LT(report.passed, report.checked);
  EXPECT_EQ(report.counterexamples.size(), report.checked - report.passed);
  for (const auto& c : report.counterexamples) EXPECT_EQ(c.lhs, -c.rhs);
  EXPECT_TRUE(report.matches_expectation());
  EXPECT_TRUE(std::is_sorted(report.counterexamples.begin(), report.counterexamples.end(),
                             [](const auto& x, const auto& y) {
                               if (x.a != y.a) return x.a < y.a;
                               if (x.b != y.b) return x.b < y.b;
                               return x.indices < y.indices;
                             }));
}

TEST(VerifyGrid, PrintedSignErratumOnlyPassesWhereLhsVanishes) {
  const auto report = biperiodic::verify_grid(IdentityId::Thm6viPrinted,
                                              biperiodic::default_grid(IdentityId::Thm6viPrinted));
  ASSERT_GT(report.passed, 0U);
  // Points that pass must have l_{2(m-n)+1} = 0; check them by evaluating every grid point.
  for (const auto& a : report.grid.a_values) {
    for (const auto& b : report.grid.b_values) {
      const SeqParams p(a, b);
      for (std::int64_t m = 0; m <= 25; m += 5) {
        for (std::int64_t n = 0; n <= 25; n += 3) {
          const Sides s = biperiodic::thm6_eval(p, IdentityId::Thm6viPrinted, m, n);
          if (s.holds()) EXPECT_TRUE(s.lhs.is_zero());
          EXPECT_EQ(s.lhs, -s.rhs);
        }
      }
    }
  }
}

TEST(VerifyGrid, DeterminantAtSingularPoint) {
  const GridSpec grid{{Rational(1)}, {Rational(-4)}, {1, 5}, std::nullopt};
  const auto report = biperiodic::verify_grid(IdentityId::DetPower, grid);
  EXPECT_EQ(report.checked, 5U);
  EXPECT_EQ(report.passed, 5U);
  EXPECT_TRUE(report.excluded.empty());
  EXPECT_TRUE(biperiodic::det_ql_power(SeqParams(Rational(1), Rational(-4)), 3).is_zero());
}

TEST(VerifyGrid, ExclusionsAreReported) {
  const GridSpec grid{{Rational(2), Rational(1)}, {Rational(-2), Rational(3)}, {-3, 3}, std::nullopt};
  const auto binet = biperiodic::verify_grid(IdentityId::BinetFib, grid);
  ASSERT_EQ(binet.excluded.size(), 1U);
  EXPECT_EQ(binet.excluded[0].a, Rational(2));
  EXPECT_EQ(binet.excluded[0].b, Rational(-2));
  EXPECT_EQ(binet.checked, 3U * 7U);
  EXPECT_TRUE(binet.matches_expectation());

  const GridSpec singular{{Rational(1)}, {Rational(-4)}, {-2, 2}, std::nullopt};
  EXPECT_EQ(biperiodic::verify_grid(IdentityId::InversePower, singular).excluded.size(), 1U);
  EXPECT_EQ(biperiodic::verify_grid(IdentityId::BinetLucas, singular).checked, 5U);
}

TEST(VerifyGrid, ParitySkipsAreCounted) {
  const GridSpec grid{{Rational(2)}, {Rational(3)}, {-2, 2}, {{-2, 2}}};
  const auto report = biperiodic::verify_grid(IdentityId::AddQQ, grid);
  EXPECT_EQ(report.checked, 9U);
  EXPECT_EQ(report.parity_skipped, 16U);
  EXPECT_TRUE(report.matches_expectation());
}

TEST(VerifyGrid, Cassini4iDiscrepancy) {
  const GridSpec grid{{Rational(2)}, {Rational(3)}, {1, 10}, std::nullopt};
  const auto report = biperiodic::verify_grid(IdentityId::Thm4iPrinted, grid);
  EXPECT_LT(report.passed, report.checked);
  EXPECT_TRUE(report.matches_expectation());
  EXPECT_TRUE(std::any_of(report.counterexamples.begin(), report.counterexamples.end(),
                          [](const auto& c) { return c.indices[0] % 2 != 0; }));
}

TEST(VerifyGrid, InvalidGrids) {
  EXPECT_THROW(biperiodic::verify_grid(IdentityId::CassiniFib, GridSpec{{}, {Rational(1)}, {1, 2}, {}}),
               biperiodic::InvalidParameter);
  EXPECT_THROW(biperiodic::verify_grid(IdentityId::CassiniFib,
                                       GridSpec{{Rational(0)}, {Rational(1)}, {1, 2}, {}}),
               biperiodic::InvalidParameter);
  EXPECT_THROW(biperiodic::verify_grid(IdentityId::Thm6i,
                                       GridSpec{{Rational(1)}, {Rational(1)}, {1, 2}, std::nullopt}),
               biperiodic::InvalidParameter);
}

TEST(VerifyGrid, MatrixFormEntryLabelsAgree) {
  const GridSpec grid{{Rational(5, 3)}, {Rational(-1)}, {1, 12}, std::nullopt};
  const auto report = biperiodic::verify_grid(IdentityId::MatrixForm, grid);
  EXPECT_EQ(report.checked, 12U);
  EXPECT_TRUE(report.matches_expectation());
}
