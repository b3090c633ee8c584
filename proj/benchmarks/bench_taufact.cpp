#include <benchmark/benchmark.h>

#include "taufact/lemma_predictors.hpp"
#include "taufact/multiset_partition.hpp"
#include "taufact/tau_engine.hpp"

using namespace taufact;

static void BM_MultisetPartitions(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    MultisetPartitions parts({m, m});
    std::size_t count = 0;
    while (parts.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_MultisetPartitions)->DenseRange(3, 7);

// Fresh engine per iteration so the atom memo starts empty.
static void BM_SequenceElasticity(benchmark::State& state) {
  const Ideal ideal = model_ideal(IsoClass::Z2X_X2PX);
  const FactoredElement a = sequence_element(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    const TauEngine engine;
    benchmark::DoNotOptimize(engine.elasticity(a, ideal));
  }
}
BENCHMARK(BM_SequenceElasticity)->DenseRange(2, 7)->Unit(benchmark::kMicrosecond);

static void BM_IntegerElasticity(benchmark::State& state) {
  const Ideal ideal(RingTag::IntegerRing, static_cast<long>(state.range(0)));
  const FactoredElement fe = build_factored(
      RingTag::IntegerRing, 1,
      {{Element::integer(2), 2}, {Element::integer(5), 1}, {Element::integer(7), 1}, {Element::integer(11), 1},
       {Element::integer(13), 1}});
  for (auto _ : state) {
    const TauEngine engine;
    benchmark::DoNotOptimize(engine.elasticity(fe, ideal));
  }
}
BENCHMARK(BM_IntegerElasticity)->Arg(3)->Arg(12)->Arg(18)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
