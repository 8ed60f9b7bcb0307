#include "biperiodic/identities.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "biperiodic/binet.hpp"
#include "biperiodic/errors.hpp"
#include "biperiodic/matrix2.hpp"
#include "biperiodic/ql_matrix.hpp"

namespace biperiodic {
namespace {

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  Arity arity;
  Expectation expectation;
};

constexpr std::array<IdentityInfo, 21> kCatalog{{
    {IdentityId::CassiniFib, "cassini-fib", Arity::Single, Expectation::Holds},
    {IdentityId::CassiniLucas, "cassini-lucas", Arity::Single, Expectation::Holds},
    {IdentityId::Thm4iPrinted, "thm4-i-printed", Arity::Single, Expectation::Discrepancy},
    {IdentityId::DetPower, "det-power", Arity::Single, Expectation::Holds},
    {IdentityId::Thm6i, "thm6-i", Arity::Pair, Expectation::Holds},
    {IdentityId::Thm6ii, "thm6-ii", Arity::Pair, Expectation::Holds},
    {IdentityId::Thm6iii, "thm6-iii", Arity::Pair, Expectation::Holds},
    {IdentityId::Thm6iv, "thm6-iv", Arity::Pair, Expectation::Holds},
    {IdentityId::Thm6v, "thm6-v", Arity::Pair, Expectation::Holds},
    {IdentityId::Thm6viPrinted, "thm6-vi-printed", Arity::Pair, Expectation::SignErratum},
    {IdentityId::Thm6viCorrected, "thm6-vi-corrected", Arity::Pair, Expectation::Holds},
    {IdentityId::AddQQ, "add-qq", Arity::Pair, Expectation::Holds},
    {IdentityId::AddLL, "add-ll", Arity::Pair, Expectation::Holds},
    {IdentityId::AddLQ, "add-lq", Arity::Pair, Expectation::Holds},
    {IdentityId::SubQQ, "sub-qq", Arity::Pair, Expectation::Holds},
    {IdentityId::SubLL, "sub-ll", Arity::Pair, Expectation::Holds},
    {IdentityId::SubQL, "sub-ql", Arity::Pair, Expectation::Holds},
    {IdentityId::BinetFib, "binet-fib", Arity::Single, Expectation::Holds},
    {IdentityId::BinetLucas, "binet-lucas", Arity::Single, Expectation::Holds},
    {IdentityId::MatrixForm, "matrix-form", Arity::Single, Expectation::Holds},
    {IdentityId::InversePower, "inverse-power", Arity::Single, Expectation::Holds},
}};

constexpr std::array<IdentityId, kCatalog.size()> kAllIds = [] {
  std::array<IdentityId, kCatalog.size()> ids{};
  for (std::size_t i = 0; i < kCatalog.size(); ++i) ids[i] = kCatalog[i].id;
  return ids;
}();

const IdentityInfo& info(IdentityId id) {
  for (const auto& entry : kCatalog) {
    if (entry.id == id) return entry;
  }
  throw std::logic_error("identity missing from catalog");
}

bool is_odd(std::int64_t n) { return epsilon(n) == 1; }

Sides matrix_sides(const Mat2& lhs, const Mat2& rhs) {
  const std::array<std::pair<const char*, std::pair<const Rational*, const Rational*>>, 4> entries{{
      {"e11", {&lhs.e11, &rhs.e11}},
      {"e12", {&lhs.e12, &rhs.e12}},
      {"e21", {&lhs.e21, &rhs.e21}},
      {"e22", {&lhs.e22, &rhs.e22}},
  }};
  for (const auto& [label, pair] : entries) {
    if (*pair.first != *pair.second) return {*pair.first, *pair.second, label};
  }
  return {lhs.e11, rhs.e11, "e11"};
}

Sides cassini_fib_at(const TermWindow& w, std::int64_t n) {
  const auto& p = w.params();
  const int e = epsilon(n);
  const Rational lhs = pow(p.a(), 1 - e) * pow(p.b(), e) * w.q(n - 1) * w.q(n + 1) -
                       pow(p.a(), e) * pow(p.b(), 1 - e) * w.q(n) * w.q(n);
  return {lhs, p.a() * sign_power(n), {}};
}

Sides cassini_fib_printed_at(const TermWindow& w, std::int64_t n) {
  const auto& p = w.params();
  const int e = epsilon(n);
  const Rational weight = pow(p.a(), 1 - e) * pow(p.b(), e);
  const Rational lhs = weight * w.q(n + 1) * w.q(n - 1) - weight * w.q(n) * w.q(n);
  return {lhs, p.a() * sign_power(n), {}};
}

Sides cassini_lucas_at(const TermWindow& w, std::int64_t n) {
  const auto& p = w.params();
  const Rational ratio = p.b() / p.a();
  const Rational lhs = pow(ratio, epsilon(n + 1)) * w.l(n - 1) * w.l(n + 1) -
                       pow(ratio, epsilon(n)) * w.l(n) * w.l(n);
  return {lhs, sign_power(n + 1) * p.ab_plus_4(), {}};
}

Sides thm6_at(IdentityId id, const TermWindow& w, std::int64_t m, std::int64_t n) {
  const Rational& k = w.params().ab_plus_4();
  auto q = [&w](std::int64_t i) -> const Rational& { return w.q(i); };
  auto l = [&w](std::int64_t i) -> const Rational& { return w.l(i); };
  switch (id) {
    case IdentityId::Thm6i:
      return {k * q(2 * (m + n + 1)), l(2 * m + 1) * l(2 * (n + 1)) + l(2 * m) * l(2 * n + 1), {}};
    case IdentityId::Thm6ii:
      return {q(2 * (m + n)), q(2 * m) * q(2 * n + 1) + q(2 * m - 1) * q(2 * n), {}};
    case IdentityId::Thm6iii:
      return {l(2 * (m + n) + 1), l(2 * m + 1) * q(2 * n + 1) + l(2 * m) * q(2 * n), {}};
    case IdentityId::Thm6iv:
      return {k * q(2 * (m - n)), l(2 * m + 1) * l(2 * (n + 1)) - l(2 * (m + 1)) * l(2 * n + 1), {}};
    case IdentityId::Thm6v:
      return {q(2 * (m - n)), q(2 * m) * q(2 * n + 1) - q(2 * m + 1) * q(2 * n), {}};
    case IdentityId::Thm6viPrinted:
      return {l(2 * (m - n) + 1), q(2 * m + 1) * l(2 * n + 1) - q(2 * (m + 1)) * l(2 * n), {}};
    case IdentityId::Thm6viCorrected:
      return {l(2 * (m - n) + 1), q(2 * (m + 1)) * l(2 * n) - q(2 * m + 1) * l(2 * n + 1), {}};
    default:
      throw std::invalid_argument("not a thm6-* identity: " + std::string(to_string(id)));
  }
}

void require_parity(IdentityId id, std::int64_t m, std::int64_t n) {
  if (!parity_valid(id, m, n)) {
    throw ParityMismatch(std::string(to_string(id)) + " is not asserted at (m, n) = (" +
                         std::to_string(m) + ", " + std::to_string(n) + ")");
  }
}

Sides addition_at(IdentityId id, const TermWindow& w, std::int64_t m, std::int64_t n) {
  require_parity(id, m, n);
  const Rational& k = w.params().ab_plus_4();
  switch (id) {
    case IdentityId::AddQQ:
      return {w.q(m + n), w.q(m + 1) * w.q(n) + w.q(m) * w.q(n - 1), {}};
    case IdentityId::AddLL:
      return {k * w.q(m + n), w.l(m + 1) * w.l(n) + w.l(m) * w.l(n - 1), {}};
    case IdentityId::AddLQ:
      return {w.l(m + n), w.l(m + 1) * w.q(n) + w.l(m) * w.q(n - 1), {}};
    default:
      throw std::invalid_argument("not an addition identity: " + std::string(to_string(id)));
  }
}

Sides subtraction_at(IdentityId id, const TermWindow& w, std::int64_t m, std::int64_t n) {
  require_parity(id, m, n);
  const Rational& k = w.params().ab_plus_4();
  switch (id) {
    case IdentityId::SubQQ:
      return {w.q(m - n), w.q(m) * w.q(n + 1) - w.q(m + 1) * w.q(n), {}};
    case IdentityId::SubLL:
      return {k * w.q(m - n), w.l(m) * w.l(n + 1) - w.l(m + 1) * w.l(n), {}};
    case IdentityId::SubQL:
      return {w.l(m - n), w.q(m) * w.l(n + 1) - w.q(m + 1) * w.l(n), {}};
    default:
      throw std::invalid_argument("not a subtraction identity: " + std::string(to_string(id)));
  }
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

TermWindow window_for(const SeqParams& p, std::int64_t m_bound, std::int64_t n_bound) {
  const std::int64_t reach = 2 * (m_bound + n_bound) + 4;
  return TermWindow(p, -reach, reach);
}

std::optional<std::string> exclusion_reason(IdentityId id, const SeqParams& p, const GridSpec& grid) {
  if (id == IdentityId::BinetFib && p.disc().is_zero()) {
    return "D = ab(ab+4) = 0: repeated root, Binet for q divides by alpha - beta = 0";
  }
  const bool needs_inverse =
      id == IdentityId::InversePower ||
      ((id == IdentityId::MatrixForm || id == IdentityId::DetPower) && grid.n_range.lo < 0);
  if (needs_inverse && p.ab_plus_4().is_zero()) {
    return "ab+4 = 0: Q_l is singular, negative powers do not exist";
  }
  return std::nullopt;
}

bool counterexample_less(const Counterexample& x, const Counterexample& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.indices < y.indices;
}

}  // namespace

std::span<const IdentityId> all_identities() { return kAllIds; }

std::string_view to_string(IdentityId id) { return info(id).name; }

IdentityId parse_identity(std::string_view name) {
  for (const auto& entry : kCatalog) {
    if (entry.name == name) return entry.id;
  }
  throw ParseError("unknown identity '" + std::string(name) + "'");
}

Arity arity(IdentityId id) { return info(id).arity; }

Expectation expectation(IdentityId id) { return info(id).expectation; }

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::Holds: return "holds";
    case Expectation::SignErratum: return "fails-with-sign-flip";
    case Expectation::Discrepancy: return "fails";
  }
  return "unknown";
}

bool parity_valid(IdentityId id, std::int64_t m, std::int64_t n) {
  switch (id) {
    case IdentityId::AddQQ:
    case IdentityId::SubQQ:
      return !is_odd(m) && !is_odd(n);
    case IdentityId::AddLL:
    case IdentityId::SubLL:
      return is_odd(m) && is_odd(n);
    case IdentityId::AddLQ:
      return is_odd(m) != is_odd(n);
    case IdentityId::SubQL:
      // Only the even-m / odd-n half of the stated mixed case survives exact checking.
      return !is_odd(m) && is_odd(n);
    default:
      return true;
  }
}

Sides cassini_fib(const SeqParams& p, std::int64_t n) {
  return cassini_fib_at(TermWindow(p, n - 1, n + 1), n);
}

Sides cassini_lucas(const SeqParams& p, std::int64_t n) {
  return cassini_lucas_at(TermWindow(p, n - 1, n + 1), n);
}

Sides cassini_fib_printed_variant(const SeqParams& p, std::int64_t n) {
  return cassini_fib_printed_at(TermWindow(p, n - 1, n + 1), n);
}

Sides thm6_eval(const SeqParams& p, IdentityId id, std::int64_t m, std::int64_t n) {
  return thm6_at(id, window_for(p, abs64(m), abs64(n)), m, n);
}

Sides addition_eval(const SeqParams& p, IdentityId id, std::int64_t m, std::int64_t n) {
  require_parity(id, m, n);
  return addition_at(id, window_for(p, abs64(m), abs64(n)), m, n);
}

Sides subtraction_eval(const SeqParams& p, IdentityId id, std::int64_t m, std::int64_t n) {
  require_parity(id, m, n);
  return subtraction_at(id, window_for(p, abs64(m), abs64(n)), m, n);
}

Sides evaluate(IdentityId id, const TermWindow& window, std::int64_t m, std::int64_t n) {
  const SeqParams& p = window.params();
  switch (id) {
    case IdentityId::CassiniFib: return cassini_fib_at(window, n);
    case IdentityId::CassiniLucas: return cassini_lucas_at(window, n);
    case IdentityId::Thm4iPrinted: return cassini_fib_printed_at(window, n);
    case IdentityId::DetPower: return {ql_power_direct(p, n).det(), det_ql_power(p, n), {}};
    case IdentityId::Thm6i:
    case IdentityId::Thm6ii:
    case IdentityId::Thm6iii:
    case IdentityId::Thm6iv:
    case IdentityId::Thm6v:
    case IdentityId::Thm6viPrinted:
    case IdentityId::Thm6viCorrected:
      return thm6_at(id, window, m, n);
    case IdentityId::AddQQ:
    case IdentityId::AddLL:
    case IdentityId::AddLQ:
      return addition_at(id, window, m, n);
    case IdentityId::SubQQ:
    case IdentityId::SubLL:
    case IdentityId::SubQL:
      return subtraction_at(id, window, m, n);
    case IdentityId::BinetFib: return {binet_fib(p, n), window.q(n), {}};
    case IdentityId::BinetLucas: return {binet_lucas(p, n), window.l(n), {}};
    case IdentityId::MatrixForm:
      return matrix_sides(ql_power_closed_form(p, n).materialize(p), ql_power_direct(p, n));
    case IdentityId::InversePower:
      return matrix_sides(ql_power_direct(p, n) * ql_power_direct(p, -n), identity2());
  }
  throw std::logic_error("unhandled identity");
}

IndexRange IndexRange::parse(std::string_view text) {
  const auto sep = text.find("..");
  auto parse_int = [text](std::string_view part) {
    std::int64_t value = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (part.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("invalid range '" + std::string(text) + "': expected LO..HI");
    }
    return value;
  };
  if (sep == std::string_view::npos) {
    throw ParseError("invalid range '" + std::string(text) + "': expected LO..HI");
  }
  IndexRange range{parse_int(text.substr(0, sep)), parse_int(text.substr(sep + 2))};
  if (range.hi < range.lo) {
    throw ParseError("invalid range '" + std::string(text) + "': LO exceeds HI");
  }
  return range;
}

std::string IndexRange::to_string() const {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

std::vector<Rational> standard_parameter_values() {
  return {Rational(1), Rational(-1), Rational(2), Rational(3), Rational(1, 2), Rational(-3, 2)};
}

GridSpec default_grid(IdentityId id) {
  GridSpec grid{standard_parameter_values(), standard_parameter_values(), {1, 200}, std::nullopt};
  switch (id) {
    case IdentityId::CassiniFib:
    case IdentityId::CassiniLucas:
    case IdentityId::Thm4iPrinted:
      break;
    case IdentityId::DetPower: grid.n_range = {1, 32}; break;
    case IdentityId::MatrixForm: grid.n_range = {1, 64}; break;
    case IdentityId::InversePower: grid.n_range = {-16, 16}; break;
    case IdentityId::BinetFib:
    case IdentityId::BinetLucas: grid.n_range = {-50, 50}; break;
    case IdentityId::Thm6i:
    case IdentityId::Thm6ii:
    case IdentityId::Thm6iii:
    case IdentityId::Thm6iv:
    case IdentityId::Thm6v:
    case IdentityId::Thm6viPrinted:
    case IdentityId::Thm6viCorrected:
      grid.n_range = {0, 25};
      grid.m_range = IndexRange{0, 25};
      break;
    case IdentityId::AddQQ:
    case IdentityId::AddLL:
    case IdentityId::AddLQ:
    case IdentityId::SubQQ:
    case IdentityId::SubLL:
    case IdentityId::SubQL:
      grid.n_range = {-30, 30};
      grid.m_range = IndexRange{-30, 30};
      break;
  }
  return grid;
}

bool IdentityReport::matches_expectation() const {
  switch (expectation(id)) {
    case Expectation::Holds:
      return passed == checked;
    case Expectation::SignErratum:
      return passed < checked &&
             std::all_of(counterexamples.begin(), counterexamples.end(),
                         [](const Counterexample& c) { return c.lhs == -c.rhs; });
    case Expectation::Discrepancy:
      return passed < checked;
  }
  return false;
}

IdentityReport verify_grid(IdentityId id, const GridSpec& grid) {
  if (grid.a_values.empty() || grid.b_values.empty()) {
    throw InvalidParameter("parameter lists must be nonempty");
  }
  const bool pair = arity(id) == Arity::Pair;
  if (pair && !grid.m_range) {
    throw InvalidParameter(std::string(to_string(id)) + " needs an m range");
  }

  IdentityReport report;
  report.id = id;
  report.grid = grid;
  if (!pair) report.grid.m_range.reset();

  const IndexRange m_range = pair ? *grid.m_range : IndexRange{0, 0};
  const std::int64_t n_bound = std::max(abs64(grid.n_range.lo), abs64(grid.n_range.hi));
  const std::int64_t m_bound = std::max(abs64(m_range.lo), abs64(m_range.hi));

  for (const Rational& a : grid.a_values) {
    for (const Rational& b : grid.b_values) {
      const SeqParams p(a, b);  // throws InvalidParameter on zero
      if (auto reason = exclusion_reason(id, p, grid)) {
        report.excluded.push_back({a, b, std::move(*reason)});
        continue;
      }
      const TermWindow window = pair ? window_for(p, m_bound, n_bound)
                                     : TermWindow(p, -n_bound - 2, n_bound + 2);
      for (std::int64_t m = m_range.lo; m <= m_range.hi; ++m) {
        for (std::int64_t n = grid.n_range.lo; n <= grid.n_range.hi; ++n) {
          if (!parity_valid(id, m, n)) {
            ++report.parity_skipped;
            continue;
          }
          Sides sides = evaluate(id, window, m, n);
          ++report.checked;
          if (sides.holds()) {
            ++report.passed;
            continue;
          }
          std::vector<std::int64_t> indices = pair ? std::vector<std::int64_t>{m, n}
                                                   : std::vector<std::int64_t>{n};
          report.counterexamples.push_back({a, b, std::move(indices), std::move(sides.lhs),
                                            std::move(sides.rhs), std::move(sides.where)});
        }
      }
    }
  }
  std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(), counterexample_less);
  return report;
}

}  // namespace biperiodic
