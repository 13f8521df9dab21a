#include <benchmark/benchmark.h>

#include "preproj/groebner.hpp"
#include "preproj/hh0.hpp"
#include "preproj/morphism.hpp"

using namespace preproj;

static void BM_PreprojectiveBasis(benchmark::State& state, const char* name) {
  DoubledQuiver dq(builtin_dynkin(name));
  auto pres = additive_relations(dq, ScalarDomain::parse("Q"));
  for (auto _ : state) {
    auto gb = groebner_of(pres, RationalDomain::rationals());
    benchmark::DoNotOptimize(gb.elements().size());
  }
}
BENCHMARK_CAPTURE(BM_PreprojectiveBasis, D6, "D6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PreprojectiveBasis, E6, "E6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PreprojectiveBasis, E8, "E8")->Unit(benchmark::kMillisecond);

// Commutator rows of Lambda(E7) over F3; arg 0 serial, 1 parallel.
static void BM_TraceSpace(benchmark::State& state) {
  Quiver q = builtin_dynkin("E7");
  auto pres = multiplicative_relations(star_decompose(q), DoubledQuiver(q), ScalarDomain::prime_field(3));
  PrimeField F(3);
  auto gb = groebner_of(pres, F);
  auto basis = gb.enumerate_basis();
  Execution ex = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) {
    TraceSpace<PrimeField> ts(gb, basis, CommutatorSpan::Generators, ex);
    benchmark::DoNotOptimize(ts.blocks().size());
  }
}
BENCHMARK(BM_TraceSpace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_VerifyDescends(benchmark::State& state) {
  auto t = paper_iso("E8");
  auto source = multiplicative_relations(star_decompose(t.doubled.base()), t.doubled, ScalarDomain::rationals());
  auto gb = groebner_of(additive_relations(t.doubled, ScalarDomain::rationals()), RationalDomain::rationals());
  Execution ex = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) {
    auto cert = verify_descends(t.map, source, gb, 28, ex);
    benchmark::DoNotOptimize(cert.descends);
  }
}
BENCHMARK(BM_VerifyDescends)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
