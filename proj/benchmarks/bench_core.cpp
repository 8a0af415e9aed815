#include <benchmark/benchmark.h>

#include "rhc/complexes.hpp"
#include "rhc/skew.hpp"

namespace {

void BM_EnumerateSRT(benchmark::State& state) {
  // zigzag of n cells: the largest descent class
  int n = static_cast<int>(state.range(0));
  std::vector<int> parts;
  for (int i = 0; i < n / 2; ++i) parts.push_back(2);
  if (n % 2) parts.push_back(1);
  rhc::Composition alpha(parts);
  rhc::GeneralizedRibbon shape = rhc::build_diagram({alpha});
  for (auto _ : state) {
    benchmark::DoNotOptimize(rhc::enumerate_srt_words(shape));
  }
}
BENCHMARK(BM_EnumerateSRT)->Arg(8)->Arg(10)->Arg(12);

void BM_BuildProjective(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<int> parts;
  for (int i = 0; i < n / 2; ++i) parts.push_back(2);
  if (n % 2) parts.push_back(1);
  rhc::Composition alpha(parts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rhc::build_projective({alpha}));
  }
}
BENCHMARK(BM_BuildProjective)->Arg(6)->Arg(8);

void BM_VerifySES(benchmark::State& state) {
  rhc::Composition a = rhc::parse_composition("(2,1)");
  rhc::Composition b = rhc::parse_composition("(1,2)");
  for (auto _ : state) {
    rhc::SES s = rhc::build_ses(a, b);
    benchmark::DoNotOptimize(rhc::verify_ses(s));
  }
}
BENCHMARK(BM_VerifySES);

void BM_RibbonComplex(benchmark::State& state) {
  auto seq = rhc::parse_composition_sequence("(2);(1,2);(2,1);(1)");
  for (auto _ : state) {
    rhc::CochainComplex cx = rhc::build_ribbon_complex(seq);
    benchmark::DoNotOptimize(rhc::cohomology_dims(cx));
  }
}
BENCHMARK(BM_RibbonComplex);

void BM_SkewDecomposition(benchmark::State& state) {
  rhc::Composition alpha = rhc::parse_composition("(1,3,2)");
  rhc::Composition beta = rhc::parse_composition("(3)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(rhc::build_skew(alpha, beta));
  }
}
BENCHMARK(BM_SkewDecomposition);

void BM_KernelRank(benchmark::State& state) {
  rhc::ModuleMap mu = rhc::mu_map(rhc::parse_composition("(2,2)"),
                                  rhc::parse_composition("(1,2,1)"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mu.matrix.kernel_basis());
  }
}
BENCHMARK(BM_KernelRank);

}  // namespace

BENCHMARK_MAIN();
