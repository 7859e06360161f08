#include <benchmark/benchmark.h>

#include <complex>

#include "dd/coeffs.hpp"
#include "dd/continuation.hpp"
#include "dd/digit_system.hpp"
#include "dd/genfunc.hpp"
#include "dd/residues.hpp"

namespace {

dd::DigitSystem no9() { return dd::DigitSystem(10, {0, 1, 2, 3, 4, 5, 6, 7, 8}); }

void BM_EnumerationThroughput(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  const int length = static_cast<int>(state.range(0));
  for (auto _ : state) {
    dd::AdmissibleRange range(ds, length);
    double n = 0.0;
    double sum = 0.0;
    while (range.next(n)) sum += n;
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(dd::admissible_count(ds, length)));
}
BENCHMARK(BM_EnumerationThroughput)->Arg(4)->Arg(6);

void BM_BlockSum(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  const int length = static_cast<int>(state.range(0));
  const dd::Cplx s{2.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::block_sum(ds, length, s));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(dd::admissible_count(ds, length)));
}
BENCHMARK(BM_BlockSum)->Arg(4)->Arg(5);

void BM_EvalGeo(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  const dd::Cplx s{-1.5, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::eval_geo(ds, s, 1e-12));
  }
}
BENCHMARK(BM_EvalGeo);

void BM_EvalFeq(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  const dd::Cplx s{-1.5, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::eval_feq(ds, s, 1e-10));
  }
}
BENCHMARK(BM_EvalFeq);

void BM_Kempner(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::kempner(ds, 1e-13));
  }
}
BENCHMARK(BM_Kempner);

void BM_BaillieBlocks(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  const int l_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::baillie_blocks(ds, {1.0, 0.0}, l_max, 450));
  }
}
BENCHMARK(BM_BaillieBlocks)->Arg(30)->Arg(120);

void BM_VCoeffs(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  const int order = static_cast<int>(state.range(0));
  const dd::Cplx s{-2.5, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::v_coeffs(ds, s, order));
  }
}
BENCHMARK(BM_VCoeffs)->Arg(60)->Arg(200);

void BM_MuRational(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::mu_rational(ds, order));
  }
}
BENCHMARK(BM_MuRational)->Arg(16)->Arg(32)->Arg(64);

void BM_BTaylor(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::B_taylor(ds, order));
  }
}
BENCHMARK(BM_BTaylor)->Arg(16)->Arg(32);

void BM_CantorSampleBatch(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    double sum = 0.0;
    for (int i = 0; i < 1000; ++i) {
      sum += dd::cantor_sample(ds, 40, seed++);
    }
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_CantorSampleBatch);

void BM_ResidueEntire(benchmark::State& state) {
  const dd::DigitSystem ds = no9();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::residue_entire(ds, {2, 0}));
  }
}
BENCHMARK(BM_ResidueEntire);

}  // namespace

BENCHMARK_MAIN();
