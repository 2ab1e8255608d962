#include <benchmark/benchmark.h>

#include "relstab/localize.hpp"

using namespace relstab;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

void BM_Rank(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  SplitMix64 rng(1);
  Mat a(F3, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Elem(rng.below(3));
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Arg(32)->Arg(128)->Arg(512);

// Hom(kG^r, kG^r) over C4: the spinning solver against the dense system.
void BM_HomBasisRegular(benchmark::State& state) {
  const auto c4 = share(cyclic(4));
  const ModuleContext ctx(c4, F2);
  std::vector<GModule> parts(std::size_t(state.range(0)), regular_module(c4, F2));
  const GModule m = ctx.direct_sum(parts).object;
  const bool dense = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(dense ? hom_basis_system(m, m) : hom_basis(m, m));
}
BENCHMARK(BM_HomBasisRegular)->Args({2, 0})->Args({2, 1})->Args({4, 0})->Args({4, 1});

void BM_StableHomJordan(benchmark::State& state) {
  const auto c8 = share(cyclic(8));
  const ModuleContext ctx(c8, F2);
  const GModule a = jordan_module(c8, F2, std::size_t(state.range(0)));
  const GModule b = jordan_module(c8, F2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(stable_hom(ctx, a, b).quotient_dim());
}
BENCHMARK(BM_StableHomJordan)->Arg(3)->Arg(7);

void BM_SuspendS3(benchmark::State& state) {
  const auto s3 = share(from_permutations({{1, 2, 0}, {1, 0, 2}}));
  const ModuleContext ctx(s3, F3);
  const GModule triv = trivial_module(s3, F3);
  const bool reduce = state.range(0) != 0;
  for (auto _ : state) {
    GModule x = triv;
    for (int k = 0; k < 2; ++k) x = reduce ? ctx.reduce(suspend(ctx, x)) : suspend(ctx, x);
    benchmark::DoNotOptimize(x.dim());
  }
}
BENCHMARK(BM_SuspendS3)->Arg(0)->Arg(1);

void BM_TruncationLocalize(benchmark::State& state) {
  const TruncationSystem sys{ComplexContext(F3)};
  SplitMix64 rng(7);
  std::vector<Complex> xs;
  for (int k = 0; k < 16; ++k) xs.push_back(random_complex(F3, -3, 3, 3, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto res = build_resolution(sys, xs[k++ % xs.size()], 4, 4096);
    benchmark::DoNotOptimize(build_ladder(sys.context(), res).l0);
  }
}
BENCHMARK(BM_TruncationLocalize);

void BM_VerifyMember(benchmark::State& state) {
  const auto s3 = share(from_permutations({{1, 2, 0}, {1, 0, 2}}));
  const SubgroupInducedSystem sys(ModuleContext(s3, F3), sylow_subgroup(s3, 3));
  SplitMix64 rng(3);
  const GModule x = sys.context().direct_sum({sys.sample_member(rng), sys.sample_member(rng)}).object;
  const auto lad = build_ladder(sys.context(), build_resolution(sys, x, 4, 4096));
  for (auto _ : state) benchmark::DoNotOptimize(verify_localization(sys, lad, 2, 1, 1).verdict);
}
BENCHMARK(BM_VerifyMember)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
