#include <benchmark/benchmark.h>

#include <random>

#include "twoval/dominance.hpp"
#include "twoval/psi.hpp"

using namespace twoval;

namespace {

const Alternative a{0}, b{1};

ScfTable fixture(std::size_t voters, std::size_t alts) {
  std::mt19937_64 rng(7);
  const Universe u = Universe::standard(alts);
  while (true) {
    ScfTable f = psi_to_table(random_psi_spec(rng, u, voters, a, b), Exec::serial);
    if (has_range(f, a, b)) return f;
  }
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_IsCsp(benchmark::State& state) {
  const ScfTable f = fixture(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_csp(f, exec_of(state)));
}

void BM_IsCompatible(benchmark::State& state) {
  const ScfTable f = fixture(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_compatible(f, a, b, exec_of(state)));
}

void BM_Bbm(benchmark::State& state) {
  const ScfTable f = fixture(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_essentially_based_and_monotonic(f, a, b, exec_of(state)));
}

void BM_PsiToTable(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const PsiSpec spec = random_psi_spec(rng, Universe::standard(3), 3, a, b);
  for (auto _ : state) benchmark::DoNotOptimize(psi_to_table(spec, exec_of(state)));
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_IsCsp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsCompatible)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bbm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiToTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
