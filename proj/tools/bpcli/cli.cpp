#include "cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biperiodic/binet.hpp"
#include "biperiodic/errors.hpp"
#include "biperiodic/identities.hpp"
#include "biperiodic/ql_matrix.hpp"
#include "biperiodic/rational.hpp"
#include "biperiodic/sequences.hpp"

namespace biperiodic::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

// Raised for argument values that parse syntactically but make no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };
enum class Method { Recurrence, Matrix, Binet };

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* flag) {
  std::vector<Rational> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(parse_rational(item, flag));
  if (values.empty() || text.back() == ',') {
    throw UsageError(std::string(flag) + ": expected a comma-separated list of rationals");
  }
  return values;
}

IndexRange parse_range(const std::string& text, const char* flag) {
  try {
    return IndexRange::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

SeqParams make_params(const std::string& a, const std::string& b) {
  try {
    return SeqParams(parse_rational(a, "--a"), parse_rational(b, "--b"));
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
}

std::vector<SequenceKind> parse_kinds(const std::string& text) {
  std::vector<SequenceKind> kinds;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "fib") {
      kinds.push_back(SequenceKind::Fibonacci);
    } else if (item == "lucas") {
      kinds.push_back(SequenceKind::Lucas);
    } else {
      throw UsageError("--kinds: unknown sequence '" + item + "' (expected fib or lucas)");
    }
  }
  if (kinds.empty()) throw UsageError("--kinds: expected fib, lucas or fib,lucas");
  return kinds;
}

Json params_json(const SeqParams& p) {
  return Json{{"a", p.a().to_string()}, {"b", p.b().to_string()}};
}

Json matrix_json(const Mat2& m) {
  return Json::array({Json::array({m.e11.to_string(), m.e12.to_string()}),
                      Json::array({m.e21.to_string(), m.e22.to_string()})});
}

Json header(const char* command, const SeqParams* p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  if (p != nullptr) j["params"] = params_json(*p);
  return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Rational compute_term(const SeqParams& p, SequenceKind kind, std::int64_t n, Method method) {
  switch (method) {
    case Method::Recurrence: return term_recurrence(p, kind, n);
    case Method::Matrix: return term_fast(p, kind, n);
    case Method::Binet:
      return kind == SequenceKind::Fibonacci ? binet_fib(p, n) : binet_lucas(p, n);
  }
  throw std::logic_error("unhandled method");
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Recurrence: return "recurrence";
    case Method::Matrix: return "matrix";
    case Method::Binet: return "binet";
  }
  return "";
}

std::string term_label(SequenceKind kind, std::int64_t index) {
  return std::string(kind == SequenceKind::Fibonacci ? "q_" : "l_") + std::to_string(index);
}

// --- subcommand state -----------------------------------------------------

struct TermArgs {
  std::string kind;
  std::string a;
  std::string b;
  std::optional<std::int64_t> n;
  std::string n_range;
  Method method = Method::Recurrence;
  Format format = Format::Json;
};

struct MatrixArgs {
  std::string a;
  std::string b;
  std::int64_t n = 0;
  std::string show = "all";
};

struct VerifyArgs {
  std::string identity = "all";
  std::string a_set;
  std::string b_set;
  std::string n_range;
  std::string m_range;
  std::size_t max_counterexamples = 10;
};

struct TableArgs {
  std::string a;
  std::string b;
  std::string n_range;
  std::string kinds = "fib,lucas";
  Format format = Format::Json;
};

int cmd_term(const TermArgs& args, std::ostream& out) {
  const SeqParams p = make_params(args.a, args.b);
  const SequenceKind kind = args.kind == "fib" ? SequenceKind::Fibonacci : SequenceKind::Lucas;
  IndexRange range{};
  if (args.n) {
    range = {*args.n, *args.n};
  } else {
    range = parse_range(args.n_range, "--n-range");
  }

  std::vector<std::pair<std::int64_t, Rational>> values;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    values.emplace_back(n, compute_term(p, kind, n, args.method));
  }

  if (args.format == Format::Csv) {
    out << "index,value\n";
    for (const auto& [n, v] : values) out << n << ',' << v << '\n';
    return kSuccess;
  }
  Json j = header("term", &p);
  j["kind"] = to_string(kind);
  j["method"] = method_name(args.method);
  Json results = Json::array();
  for (const auto& [n, v] : values) {
    results.push_back({{"index", std::to_string(n)}, {"value", v.to_string()}});
  }
  j["results"] = std::move(results);
  emit_json(out, j);
  return kSuccess;
}

Json closed_form_json(const SeqParams& p, const ClosedForm& form) {
  const SequenceKind kind = form.core_kind();
  const std::int64_t n = form.n;
  Json j;
  j["parity"] = form.parity == Parity::Even ? "even" : "odd";
  j["prefactor"] = {{"a_over_b_pow", std::to_string(form.scale_ab_pow)},
                    {"ab_plus_4_pow", std::to_string(form.scale_abp4_pow)},
                    {"value", form.prefactor(p).to_string()}};
  j["core_labels"] = Json::array(
      {Json::array({term_label(kind, n + 1), term_label(kind, n)}),
       Json::array({"(b/a)" + term_label(kind, n), term_label(kind, n - 1)})});
  j["core"] = matrix_json(form.core);
  return j;
}

int cmd_matrix(const MatrixArgs& args, std::ostream& out) {
  const SeqParams p = make_params(args.a, args.b);
  const bool all = args.show == "all";
  Json j = header("matrix", &p);
  j["n"] = std::to_string(args.n);
  if (all || args.show == "entries") j["entries"] = matrix_json(ql_power_direct(p, args.n));
  if (all || args.show == "closed-form") {
    j["closed_form"] = closed_form_json(p, ql_power_closed_form(p, args.n));
  }
  if (all || args.show == "det") j["det"] = det_ql_power(p, args.n).to_string();
  emit_json(out, j);
  return kSuccess;
}

Json report_json(const IdentityReport& report, std::size_t max_counterexamples) {
  auto values = [](const std::vector<Rational>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(x.to_string());
    return arr;
  };
  Json grid{{"a", values(report.grid.a_values)},
            {"b", values(report.grid.b_values)},
            {"n_range", report.grid.n_range.to_string()}};
  if (report.grid.m_range) grid["m_range"] = report.grid.m_range->to_string();

  Json excluded = Json::array();
  for (const auto& e : report.excluded) {
    excluded.push_back({{"a", e.a.to_string()}, {"b", e.b.to_string()}, {"reason", e.reason}});
  }
  Json counterexamples = Json::array();
  const std::size_t shown = std::min(max_counterexamples, report.counterexamples.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& c = report.counterexamples[i];
    Json indices = Json::array();
    for (auto idx : c.indices) indices.push_back(std::to_string(idx));
    Json entry{{"a", c.a.to_string()},
               {"b", c.b.to_string()},
               {"indices", std::move(indices)},
               {"lhs", c.lhs.to_string()},
               {"rhs", c.rhs.to_string()}};
    if (!c.where.empty()) entry["entry"] = c.where;
    counterexamples.push_back(std::move(entry));
  }
  return Json{{"identity", to_string(report.id)},
              {"expected", to_string(expectation(report.id))},
              {"grid", std::move(grid)},
              {"checked", std::to_string(report.checked)},
              {"passed", std::to_string(report.passed)},
              {"parity_skipped", std::to_string(report.parity_skipped)},
              {"excluded", std::move(excluded)},
              {"counterexamples_total", std::to_string(report.counterexamples.size())},
              {"counterexamples", std::move(counterexamples)},
              {"as_expected", report.matches_expectation()}};
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  std::vector<IdentityId> ids;
  if (args.identity == "all") {
    ids.assign(all_identities().begin(), all_identities().end());
  } else {
    try {
      ids.push_back(parse_identity(args.identity));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--identity: ") + e.what());
    }
  }
  std::optional<std::vector<Rational>> a_set;
  std::optional<std::vector<Rational>> b_set;
  std::optional<IndexRange> n_range;
  std::optional<IndexRange> m_range;
  if (!args.a_set.empty()) a_set = parse_rational_list(args.a_set, "--a-set");
  if (!args.b_set.empty()) b_set = parse_rational_list(args.b_set, "--b-set");
  if (!args.n_range.empty()) n_range = parse_range(args.n_range, "--n-range");
  if (!args.m_range.empty()) m_range = parse_range(args.m_range, "--m-range");
  auto nonzero = [](const std::vector<Rational>& xs) {
    return std::none_of(xs.begin(), xs.end(), [](const Rational& x) { return x.is_zero(); });
  };
  if ((a_set && !nonzero(*a_set)) || (b_set && !nonzero(*b_set))) {
    throw UsageError("parameter sets must not contain zero");
  }

  Json j = header("verify", nullptr);
  Json reports = Json::array();
  bool all_as_expected = true;
  for (IdentityId id : ids) {
    GridSpec grid = default_grid(id);
    if (a_set) grid.a_values = *a_set;
    if (b_set) grid.b_values = *b_set;
    if (n_range) grid.n_range = *n_range;
    if (m_range && grid.m_range) grid.m_range = *m_range;
    const IdentityReport report = verify_grid(id, grid);
    all_as_expected = all_as_expected && report.matches_expectation();
    reports.push_back(report_json(report, args.max_counterexamples));
  }
  j["reports"] = std::move(reports);
  j["all_as_expected"] = all_as_expected;
  emit_json(out, j);
  return all_as_expected ? kSuccess : kVerificationFailed;
}

int cmd_table(const TableArgs& args, std::ostream& out) {
  const SeqParams p = make_params(args.a, args.b);
  const IndexRange range = parse_range(args.n_range, "--n-range");
  const std::vector<SequenceKind> kinds = parse_kinds(args.kinds);
  std::vector<std::vector<Rational>> columns;
  for (SequenceKind kind : kinds) columns.push_back(term_range(p, kind, range.lo, range.hi));

  if (args.format == Format::Csv) {
    out << "index";
    for (SequenceKind kind : kinds) out << ',' << to_string(kind);
    out << '\n';
    for (std::int64_t n = range.lo; n <= range.hi; ++n) {
      out << n;
      for (const auto& col : columns) out << ',' << col[static_cast<std::size_t>(n - range.lo)];
      out << '\n';
    }
    return kSuccess;
  }
  Json j = header("table", &p);
  Json kind_names = Json::array();
  for (SequenceKind kind : kinds) kind_names.push_back(to_string(kind));
  j["kinds"] = std::move(kind_names);
  j["n_range"] = range.to_string();
  Json rows = Json::array();
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    Json row{{"index", std::to_string(n)}};
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      row[std::string(to_string(kinds[k]))] =
          columns[k][static_cast<std::size_t>(n - range.lo)].to_string();
    }
    rows.push_back(std::move(row));
  }
  j["results"] = std::move(rows);
  emit_json(out, j);
  return kSuccess;
}

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}};
const std::map<std::string, Method> kMethods{
    {"recurrence", Method::Recurrence}, {"matrix", Method::Matrix}, {"binet", Method::Binet}};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bi-periodic Fibonacci and Lucas sequences", "biperiodic"};
  app.require_subcommand(1);

  TermArgs term;
  auto* term_cmd = app.add_subcommand("term", "Compute q_n or l_n");
  term_cmd->add_option("--kind", term.kind, "fib or lucas")
      ->required()
      ->check(CLI::IsMember({"fib", "lucas"}));
  term_cmd->add_option("--a", term.a, "Parameter a (N, -N or N/D)")->required();
  term_cmd->add_option("--b", term.b, "Parameter b (N, -N or N/D)")->required();
  auto* n_opt = term_cmd->add_option("--n", term.n, "Index");
  auto* range_opt = term_cmd->add_option("--n-range", term.n_range, "Index range LO..HI");
  n_opt->excludes(range_opt);
  term_cmd->add_option("--method", term.method, "recurrence, matrix or binet")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  term_cmd->add_option("--format", term.format, "json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Powers of the generating matrix Q_l");
  matrix_cmd->add_option("--a", matrix.a, "Parameter a")->required();
  matrix_cmd->add_option("--b", matrix.b, "Parameter b")->required();
  matrix_cmd->add_option("--n", matrix.n, "Exponent")->required();
  matrix_cmd->add_option("--show", matrix.show, "entries, closed-form, det or all")
      ->check(CLI::IsMember({"entries", "closed-form", "det", "all"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities over a parameter grid");
  verify_cmd->add_option("--identity", verify.identity, "Identity id or 'all'");
  verify_cmd->add_option("--a-set", verify.a_set, "Comma-separated values of a");
  verify_cmd->add_option("--b-set", verify.b_set, "Comma-separated values of b");
  verify_cmd->add_option("--n-range", verify.n_range, "Range LO..HI for n");
  verify_cmd->add_option("--m-range", verify.m_range, "Range LO..HI for m");
  verify_cmd->add_option("--max-counterexamples", verify.max_counterexamples,
                         "Counterexamples printed per identity");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Tabulate terms over an index range");
  table_cmd->add_option("--a", table.a, "Parameter a")->required();
  table_cmd->add_option("--b", table.b, "Parameter b")->required();
  table_cmd->add_option("--n-range", table.n_range, "Range LO..HI")->required();
  table_cmd->add_option("--kinds", table.kinds, "fib, lucas or fib,lucas");
  table_cmd->add_option("--format", table.format, "json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (term_cmd->parsed() && !term.n && term.n_range.empty()) {
      throw UsageError("term: one of --n or --n-range is required");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  // Buffer the output so that a failing command never leaves partial output behind.
  std::ostringstream buffer;
  try {
    int code = kSuccess;
    if (term_cmd->parsed()) code = cmd_term(term, buffer);
    if (matrix_cmd->parsed()) code = cmd_matrix(matrix, buffer);
    if (verify_cmd->parsed()) code = cmd_verify(verify, buffer);
    if (table_cmd->parsed()) code = cmd_table(table, buffer);
    out << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace biperiodic::cli
