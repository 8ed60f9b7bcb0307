#include <benchmark/benchmark.h>

#include "biperiodic/binet.hpp"
#include "biperiodic/matrix2.hpp"
#include "biperiodic/ql_matrix.hpp"
#include "biperiodic/sequences.hpp"

namespace {

using biperiodic::Rational;
using biperiodic::SeqParams;
using biperiodic::SequenceKind;

const SeqParams& params() {
  static const SeqParams p(Rational(2), Rational(3));
  return p;
}

void BM_TermRecurrence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(biperiodic::term_recurrence(params(), SequenceKind::Fibonacci, state.range(0)));
  }
}

void BM_TermFast(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(biperiodic::term_fast(params(), SequenceKind::Fibonacci, state.range(0)));
  }
}

void BM_Binet(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(biperiodic::binet_fib(params(), state.range(0)));
  }
}

void BM_ClosedForm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(biperiodic::ql_power_closed_form(params(), state.range(0)).materialize(params()));
  }
}

void BM_MatPow(benchmark::State& state) {
  const auto q = biperiodic::build_ql(params());
  for (auto _ : state) {
    benchmark::DoNotOptimize(biperiodic::mat_pow(q, static_cast<std::uint64_t>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_TermRecurrence)->RangeMultiplier(10)->Range(10, 10000);
BENCHMARK(BM_TermFast)->RangeMultiplier(10)->Range(10, 100000);
BENCHMARK(BM_Binet)->RangeMultiplier(10)->Range(10, 100000);
BENCHMARK(BM_ClosedForm)->RangeMultiplier(10)->Range(10, 10000);
BENCHMARK(BM_MatPow)->RangeMultiplier(10)->Range(10, 100000);
BENCHMARK_MAIN();
