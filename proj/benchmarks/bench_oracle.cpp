// Serial-reference vs OpenMP oracle kernels on fixed workloads.

#include <benchmark/benchmark.h>

#include "stabcut/codes.hpp"
#include "stabcut/oracle.hpp"

using namespace stabcut;

namespace {

oracle::OracleBudget wide_budget() {
  oracle::OracleBudget budget;
  budget.max_subset_qubits = 12;
  budget.max_statevector_qubits = 14;
  return budget;
}

const StabilizerCode& toric3() {
  static const StabilizerCode code = toric_code(3);
  return code;
}

QubitSubset toric3_eight() {
  return QubitSubset(18, {0, 1, 2, 3, 4, 5, 6, 7});
}

GroundStateSpec ghz_spec(std::size_t n) {
  const StabilizerCode code = repetition_code(n);
  GeneratorList fixed(n);
  PauliOperator all_x(n);
  for (std::size_t i = 0; i < n; ++i) all_x.x().set(i);
  fixed.add(all_x);
  return GroundStateSpec{code, fixed};
}

void LocalizedCountSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::serial::brute_localized_count(toric3(), toric3_eight(), wide_budget()));
  }
}

void LocalizedCountOpenMP(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::brute_localized_count(toric3(), toric3_eight(), wide_budget()));
  }
}

void StatevectorEntropySerial(benchmark::State& state) {
  const auto spec = ghz_spec(static_cast<std::size_t>(state.range(0)));
  const QubitSubset a(spec.code.num_qubits(), {0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::serial::statevector_entropy(spec, a, wide_budget()));
  }
}

void StatevectorEntropyOpenMP(benchmark::State& state) {
  const auto spec = ghz_spec(static_cast<std::size_t>(state.range(0)));
  const QubitSubset a(spec.code.num_qubits(), {0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::statevector_entropy(spec, a, wide_budget()));
  }
}

void DistanceSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::serial::brute_distance(toric3(), wide_budget()));
  }
}

void DistanceOpenMP(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_distance(toric3(), wide_budget()));
  }
}

void WitnessSearchSerial(benchmark::State& state) {
  const StabilizerCode code = repetition_code(8);
  const QubitSubset a(8, {0, 1, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::serial::quantum_sharing_witness_exists(code, a, wide_budget()));
  }
}

void WitnessSearchOpenMP(benchmark::State& state) {
  const StabilizerCode code = repetition_code(8);
  const QubitSubset a(8, {0, 1, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::quantum_sharing_witness_exists(code, a, wide_budget()));
  }
}

}  // namespace

BENCHMARK(LocalizedCountSerial);
BENCHMARK(LocalizedCountOpenMP);
BENCHMARK(StatevectorEntropySerial)->Arg(12)->Arg(14);
BENCHMARK(StatevectorEntropyOpenMP)->Arg(12)->Arg(14);
BENCHMARK(DistanceSerial);
BENCHMARK(DistanceOpenMP);
BENCHMARK(WitnessSearchSerial);
BENCHMARK(WitnessSearchOpenMP);

BENCHMARK_MAIN();
