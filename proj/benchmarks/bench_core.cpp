#include <benchmark/benchmark.h>

#include "gkz/instances.hpp"
#include "gkz/series.hpp"

using namespace gkz;

namespace {

const NefPartitionData& p3_npd() {
  static NefPartitionData npd = realize_instance(builtin_instance("p3-8planes"));
  return npd;
}

const NefPartitionData& p1_npd() {
  static NefPartitionData npd = realize_instance(builtin_instance("p1-elliptic"));
  return npd;
}

}  // namespace

static void BM_HermiteNormalForm_P3(benchmark::State& state) {
  IntMatrix a = build_cayley_gkz(p3_npd()).a;
  for (auto _ : state) {
    auto res = hermite_normal_form(a);
    benchmark::DoNotOptimize(res.rank);
  }
}
BENCHMARK(BM_HermiteNormalForm_P3);

static void BM_FacetEnumeration_P3(benchmark::State& state) {
  GkzSystem g = build_cayley_gkz(p3_npd());
  for (auto _ : state) {
    auto normals = facet_normals_RA(g);
    benchmark::DoNotOptimize(normals.size());
  }
}
BENCHMARK(BM_FacetEnumeration_P3)->Unit(benchmark::kMillisecond);

static void BM_MpcpFan_P3(benchmark::State& state) {
  LatticePolytope delta = p3_npd().delta;
  for (auto _ : state) {
    Fan f = mpcp_fan(delta);
    benchmark::DoNotOptimize(f.max_cones.size());
  }
}
BENCHMARK(BM_MpcpFan_P3)->Unit(benchmark::kMillisecond);

static void BM_CohomRing_P3(benchmark::State& state) {
  for (auto _ : state) {
    CohomRing ring = CohomRing::build(p3_npd().fan);
    benchmark::DoNotOptimize(ring.dimension());
  }
}
BENCHMARK(BM_CohomRing_P3)->Unit(benchmark::kMillisecond);

static void BM_AssembleSeries_P1(benchmark::State& state) {
  const auto& npd = p1_npd();
  GkzSystem g = build_cayley_gkz(npd);
  CohomRing ring = CohomRing::build(npd.fan);
  for (auto _ : state) {
    CohomSeries b = assemble_B(ring, npd, g, state.range(0));
    benchmark::DoNotOptimize(b.terms.size());
  }
}
BENCHMARK(BM_AssembleSeries_P1)->Arg(4)->Arg(8);

static void BM_BoxOperators_P3(benchmark::State& state) {
  GkzSystem g = build_cayley_gkz(p3_npd());
  for (auto _ : state) {
    auto ops = box_operators_up_to(g, 2);
    benchmark::DoNotOptimize(ops.size());
  }
}
BENCHMARK(BM_BoxOperators_P3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
