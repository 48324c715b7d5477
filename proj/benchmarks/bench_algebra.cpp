#include <benchmark/benchmark.h>

#include "blues/optimizer.hpp"

using namespace blues;

namespace {

void BM_PicardStep(benchmark::State& state) {
  ProblemConfig cfg;
  MethodKind method = state.range(0) == 0 ? MethodKind::VIM : MethodKind::BLUES;
  Field u = run(ProcedureSpec::picard(), method, cfg, 4).iterates.back();
  for (auto _ : state) {
    Field next = apply_T(method, u, cfg);
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK(BM_PicardStep)->Arg(0)->Arg(1);

void BM_ErrorFunctional(benchmark::State& state) {
  ProblemConfig cfg;
  ErrorFunctionalConfig efc;
  auto trace = run(ProcedureSpec::hybrid_pk(ParamValue(std::string("lambda"))),
                   MethodKind::BLUES, cfg, static_cast<int>(state.range(0)));
  const Field& u = trace.iterates.back();
  for (auto _ : state) {
    ErrorPolynomial E = error_functional(u, cfg, efc);
    benchmark::DoNotOptimize(E);
  }
}
BENCHMARK(BM_ErrorFunctional)->Arg(2)->Arg(3);

void BM_GreedyMann(benchmark::State& state) {
  ProblemConfig cfg;
  ErrorFunctionalConfig efc;
  for (auto _ : state) {
    GreedyOutcome out = greedy_schedule(ProcedureSpec::Kind::Mann, MethodKind::VIM, cfg,
                                        efc, 3);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_GreedyMann);

}  // namespace

BENCHMARK_MAIN();
