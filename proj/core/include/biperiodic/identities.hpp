#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biperiodic/rational.hpp"
#include "biperiodic/sequences.hpp"

namespace biperiodic {

enum class IdentityId {
  CassiniFib,
  CassiniLucas,
  Thm4iPrinted,
  DetPower,
  Thm6i,
  Thm6ii,
  Thm6iii,
  Thm6iv,
  Thm6v,
  Thm6viPrinted,
  Thm6viCorrected,
  AddQQ,
  AddLL,
  AddLQ,
  SubQQ,
  SubLL,
  SubQL,
  BinetFib,
  BinetLucas,
  MatrixForm,
  InversePower,
};

/// Every identity, in report order.
std::span<const IdentityId> all_identities();

std::string_view to_string(IdentityId id);
/// Throws ParseError for unknown names.
IdentityId parse_identity(std::string_view name);

/// How many indices an identity takes: n alone, or (m, n).
enum class Arity { Single, Pair };
Arity arity(IdentityId id);

/// What a grid run is expected to show.
enum class Expectation {
  Holds,        // every evaluated point passes
  SignErratum,  // fails somewhere, and every failure has lhs = -rhs
  Discrepancy,  // fails somewhere
};
Expectation expectation(IdentityId id);
std::string_view to_string(Expectation e);

/// Both sides of one identity at one point. For matrix identities `where`
/// names the first differing entry (or e11 when all agree).
struct Sides {
  Rational lhs;
  Rational rhs;
  std::string where;

  bool holds() const { return lhs == rhs; }
};

// Single-point evaluators. Each returns both sides exactly.

/// a^{1-e} b^e q_{n-1} q_{n+1} - a^e b^{1-e} q_n^2 = a (-1)^n, e = eps(n).
Sides cassini_fib(const SeqParams& p, std::int64_t n);
/// (b/a)^{eps(n+1)} l_{n-1} l_{n+1} - (b/a)^{eps(n)} l_n^2 = (-1)^{n+1} (ab+4).
Sides cassini_lucas(const SeqParams& p, std::int64_t n);
/// Printed variant with a^{1-e} b^e on both products; fails for a != b.
Sides cassini_fib_printed_variant(const SeqParams& p, std::int64_t n);

/// id must be one of the Thm6* values.
Sides thm6_eval(const SeqParams& p, IdentityId id, std::int64_t m, std::int64_t n);
/// id in {AddQQ, AddLL, AddLQ}; throws ParityMismatch outside the parity domain.
Sides addition_eval(const SeqParams& p, IdentityId id, std::int64_t m, std::int64_t n);
/// id in {SubQQ, SubLL, SubQL}; throws ParityMismatch outside the parity domain.
Sides subtraction_eval(const SeqParams& p, IdentityId id, std::int64_t m, std::int64_t n);

/// Whether (m, n) lies in the parity domain of an addition/subtraction id.
/// Always true for the other ids.
bool parity_valid(IdentityId id, std::int64_t m, std::int64_t n);

/// Generic evaluator over a precomputed window. `m` is ignored for Single ids.
Sides evaluate(IdentityId id, const TermWindow& window, std::int64_t m, std::int64_t n);

struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  /// "LO..HI"; throws ParseError.
  static IndexRange parse(std::string_view text);
  std::string to_string() const;
};

struct GridSpec {
  std::vector<Rational> a_values;
  std::vector<Rational> b_values;
  IndexRange n_range;
  std::optional<IndexRange> m_range;  // Pair identities only
};

/// {1, -1, 2, 3, 1/2, -3/2}
std::vector<Rational> standard_parameter_values();

/// Standard parameter grid with the index ranges each identity is stated over.
GridSpec default_grid(IdentityId id);

struct Counterexample {
  Rational a;
  Rational b;
  std::vector<std::int64_t> indices;
  Rational lhs;
  Rational rhs;
  std::string where;
};

/// Parameter point skipped because the identity is undefined there.
struct Exclusion {
  Rational a;
  Rational b;
  std::string reason;
};

struct IdentityReport {
  IdentityId id{};
  GridSpec grid;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t parity_skipped = 0;
  std::vector<Counterexample> counterexamples;  // sorted by (a, b, indices)
  std::vector<Exclusion> excluded;

  bool matches_expectation() const;
};

/// Exhaustive run of one identity over a grid. Throws InvalidParameter for
/// empty or zero-containing parameter lists and for a Pair identity without
/// an m range.
IdentityReport verify_grid(IdentityId id, const GridSpec& grid);

}  // namespace biperiodic
