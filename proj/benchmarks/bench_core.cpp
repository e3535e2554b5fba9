#include <benchmark/benchmark.h>

#include "lgorb/btw_jacobian.hpp"
#include "lgorb/koszul_oracle.hpp"
#include "lgorb/orbifold.hpp"

using namespace lgorb;

namespace {

struct Model {
  MultiPoly w;
  SymmetryGroup group;
};

Model surface(int genus) {
  const int n = 2 * genus + 1;
  const std::string e = std::to_string(n);
  auto w = parse_poly("x1^" + e + " + x2^" + e + " + x3^" + e + " - x1*x2*x3", 3, CyclotomicField::get(n));
  return {w, generate_group({{1, 1, n - 2}}, n, w)};
}

Model chain(int a1, int a2) {
  const std::string text = "x1^" + std::to_string(a1) + "*x2 + x2^" + std::to_string(a2);
  auto sym = maximal_diagonal_symmetries(parse_poly(text, 2, CyclotomicField::get(1)));
  auto w = parse_poly(text, 2, CyclotomicField::get(2 * sym.n));
  return {w, generate_group(sym.generators, sym.n, w)};
}

TwistedOptions serial() {
  TwistedOptions o;
  o.jobs = 1;
  return o;
}

}  // namespace

static void BM_CyclotomicMul(benchmark::State& state) {
  const auto* f = CyclotomicField::get(static_cast<int>(state.range(0)));
  const CycScalar a = zeta_power_in(f, 1, f->order()) + CycScalar(3);
  const CycScalar b = zeta_power_in(f, 2, f->order()) - CycScalar(mpq_class(1, 7));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(3)->Arg(9)->Arg(18)->Arg(35);

static void BM_MilnorAlgebra(benchmark::State& state) {
  const auto m = surface(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MilnorAlgebra alg(m.w, m.group[0], LocalMode::Auto);
    benchmark::DoNotOptimize(alg.dim());
  }
}
BENCHMARK(BM_MilnorAlgebra)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SurfaceAlgebra(benchmark::State& state) {
  const auto m = surface(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    TwistedAlgebra a(m.w, m.group, serial());
    benchmark::DoNotOptimize(a.size());
  }
}
BENCHMARK(BM_SurfaceAlgebra)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ChainAlgebraJobs(benchmark::State& state) {
  const auto m = chain(4, 3);
  TwistedOptions opt;
  opt.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TwistedAlgebra a(m.w, m.group, opt);
    benchmark::DoNotOptimize(a.size());
  }
}
BENCHMARK(BM_ChainAlgebraJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_SigmaInversePair(benchmark::State& state) {
  const auto m = surface(static_cast<int>(state.range(0)));
  const auto& g = m.group[1];
  const auto gi = g.inverse();
  MilnorAlgebra alg(m.w, m.group[0], LocalMode::Auto);
  for (auto _ : state) benchmark::DoNotOptimize(sigma(m.w, g, gi, alg));
}
BENCHMARK(BM_SigmaInversePair)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_ChainCupOracle(benchmark::State& state) {
  const auto m = surface(static_cast<int>(state.range(0)));
  const auto& g = m.group[1];
  MilnorAlgebra alg(m.w, m.group[0], LocalMode::Auto);
  for (auto _ : state) benchmark::DoNotOptimize(chain_cup_oracle(m.w, g, g.inverse(), alg));
}
BENCHMARK(BM_ChainCupOracle)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_KoszulDimensions(benchmark::State& state) {
  const auto m = chain(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sector_dimension_oracle(m.w, m.group[0]).total());
}
BENCHMARK(BM_KoszulDimensions)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_PropertySuite(benchmark::State& state) {
  const auto m = chain(3, 3);
  TwistedAlgebra a(m.w, m.group, serial());
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_braided(a).passed);
    benchmark::DoNotOptimize(check_associative(a).passed);
  }
}
BENCHMARK(BM_PropertySuite)->Unit(benchmark::kMillisecond);

static void BM_CompareJac(benchmark::State& state) {
  const auto m = chain(3, 4);
  TwistedAlgebra a(m.w, m.group, serial());
  JacPrimeAlgebra j(m.w, m.group, serial());
  for (auto _ : state) benchmark::DoNotOptimize(compare(a, j).verdict);
}
BENCHMARK(BM_CompareJac)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
