#include <benchmark/benchmark.h>

#include <vector>

#include "sqstable/predicates.hpp"
#include "sqstable/ring.hpp"
#include "sqstable/structure.hpp"
#include "sqstable/theorems.hpp"

namespace {

using sqs::RingExpr;

// Rings are rebuilt per iteration where the memoized structure would
// otherwise hide the cost being measured.
RingExpr matrix_ring(int n) { return RingExpr::matrix(2, RingExpr::cyclic(n)); }

void BM_BuildMatrixRing(benchmark::State& state) {
  const RingExpr expr = matrix_ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqs::build(expr));
}
BENCHMARK(BM_BuildMatrixRing)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_VerifyAxioms(benchmark::State& state) {
  const sqs::Ring ring = sqs::build(matrix_ring(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sqs::verify_axioms(ring));
}
BENCHMARK(BM_VerifyAxioms)->Arg(2)->Arg(3)->Arg(4);

void BM_JacobsonRadical(benchmark::State& state) {
  const RingExpr expr = matrix_ring(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    const sqs::Ring ring = sqs::build(expr);
    state.ResumeTiming();
    benchmark::DoNotOptimize(sqs::jacobson_radical(ring).size());
  }
}
BENCHMARK(BM_JacobsonRadical)->Arg(2)->Arg(3)->Arg(4);

void BM_AllIdeals(benchmark::State& state) {
  const RingExpr expr = matrix_ring(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    const sqs::Ring ring = sqs::build(expr);
    state.ResumeTiming();
    benchmark::DoNotOptimize(sqs::all_ideals(ring));
  }
}
BENCHMARK(BM_AllIdeals)->Arg(2)->Arg(3)->Arg(4);

// Square stability of J(T_2(Z_n)): definition versus the fast form.
template <bool Fast>
void BM_SquareStable(benchmark::State& state) {
  const sqs::Ring ring = sqs::build(RingExpr::triangular(2, RingExpr::cyclic(state.range(0))));
  const sqs::Ideal& j = sqs::jacobson_radical(ring);
  for (auto _ : state) {
    auto result = Fast ? sqs::is_square_stable_fast(ring, j) : sqs::is_square_stable_def(ring, j);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SquareStable<false>)->Name("BM_SquareStableDef")->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_SquareStable<true>)->Name("BM_SquareStableFast")->Arg(2)->Arg(4)->Arg(6);

void BM_ExchangeIdeal(benchmark::State& state) {
  const sqs::Ring ring = sqs::build(matrix_ring(static_cast<int>(state.range(0))));
  const sqs::Ideal& j = sqs::jacobson_radical(ring);
  for (auto _ : state) benchmark::DoNotOptimize(sqs::is_exchange_ideal(ring, j));
}
BENCHMARK(BM_ExchangeIdeal)->Arg(2)->Arg(3)->Arg(4);

void BM_DefaultCorpus(benchmark::State& state) {
  const std::vector<RingExpr> corpus = sqs::default_corpus();
  std::vector<sqs::TheoremId> ids(sqs::instance_theorems().begin(), sqs::instance_theorems().end());
  ids.push_back(sqs::TheoremId::X41);
  sqs::CorpusOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sqs::run_corpus(corpus, ids, options));
}
BENCHMARK(BM_DefaultCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
