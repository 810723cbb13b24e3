#include <benchmark/benchmark.h>

#include <su2lgt/ansatz.hpp>
#include <su2lgt/circuit.hpp>
#include <su2lgt/conjugation.hpp>
#include <su2lgt/model.hpp>
#include <su2lgt/sampling.hpp>

using namespace su2lgt;

static void BM_Expectation(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto h = build_hamiltonian({n, 1.0, 1.0});
  const StateVector psi =
      StateVector::basis_state(2 * n, strong_coupling_state(n, 0));
  for (auto _ : state) benchmark::DoNotOptimize(psi.expectation(h));
  state.SetLabel(std::to_string(h.size()) + " terms");
}
BENCHMARK(BM_Expectation)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_CircuitRun(benchmark::State& state) {
  const unsigned layers = static_cast<unsigned>(state.range(0));
  const Circuit c = ansatz_brickwork(6, layers);
  const ParamVector theta(c.n_params, 0.3);
  const auto input = strong_coupling_state(6, 0);
  for (auto _ : state) benchmark::DoNotOptimize(run_noiseless(c, theta, input));
}
BENCHMARK(BM_CircuitRun)->Arg(5)->Arg(10)->Arg(15);

static void BM_TailConjugation(benchmark::State& state) {
  const auto h = build_hamiltonian({4, 1.0, 1.0});
  const auto split = split_static_tail(ansatz_n4_baryon_general());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        conjugate_hamiltonian_by_tail(h, split.static_tail));
}
BENCHMARK(BM_TailConjugation);

static void BM_SampledEnergy(benchmark::State& state) {
  const auto h = build_hamiltonian({2, 1.0, 1.0});
  const Circuit c = ansatz_n2_singlet_family();
  const StateVector psi = run_noiseless(c, {0.4, 1.1}, 0);
  const auto groups = group_for_measurement(h);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto records = sample_groups(psi, groups, 8024, nullptr, seed++);
    benchmark::DoNotOptimize(estimate_expectations(records, h));
  }
}
BENCHMARK(BM_SampledEnergy);

BENCHMARK_MAIN();
