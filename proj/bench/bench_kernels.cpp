// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernel for each brute-force routine.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "torusconj/lattice.hpp"
#include "torusconj/oracle.hpp"

namespace torusconj {
namespace {

const IntMatrix kTorsionRows{{2, 4, 6, 1, 3, 5}, {1, 1, 0, 2, 0, 3}};
constexpr std::uint64_t kTorsionModulus = 12;  // 12^6 residues

const IntMatrix kLatticeA{{1, 2, 3, 4}, {0, 3, 1, 2}};
const IntMatrix kLatticeB{{1, 5, 4, 6}, {0, 3, 1, 2}};
const Integer kLatticeBound{9};

const WeightVector kClosedWeights{make_vector({1, 2, 3, 4})};
const Integer kClosednessBound{12};

const IntMatrix kPermA{{1, 0, 2, 0, 3, 1, 0}, {0, 1, 1, 2, 0, 0, 1}};
const IntMatrix kPermB{{0, 1, 2, 0, 1, 3, 0}, {1, 0, 0, 2, 0, 1, 1}};

template <auto Fn>
void torsion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(kTorsionRows, kTorsionModulus));
}

template <auto Fn>
void lattice_box(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(kLatticeA, kLatticeB, kLatticeBound));
}

template <auto Fn>
void closedness(benchmark::State& state) {
  // Stable weights: the search exhausts every level without a witness.
  for (auto _ : state) benchmark::DoNotOptimize(Fn(kClosedWeights, ZeroPattern(4), kClosednessBound));
}

template <auto Fn>
void permuted(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(kPermA, kPermB));
}

using TorsionFn = std::uint64_t (*)(const IntMatrix&, std::uint64_t);
using LatticeFn = bool (*)(const IntMatrix&, const IntMatrix&, const Integer&);
using ClosednessFn = std::optional<IntVector> (*)(const WeightVector&, const ZeroPattern&, const Integer&);
using PermutedFn = std::optional<Permutation> (*)(const IntMatrix&, const IntMatrix&);

BENCHMARK(torsion<static_cast<TorsionFn>(serial::torsion_count)>)->Name("torsion_count/serial");
BENCHMARK(torsion<static_cast<TorsionFn>(torsion_count)>)->Name("torsion_count/openmp");
BENCHMARK(lattice_box<static_cast<LatticeFn>(serial::lattice_equal_bounded)>)->Name("lattice_equal_bounded/serial");
BENCHMARK(lattice_box<static_cast<LatticeFn>(lattice_equal_bounded)>)->Name("lattice_equal_bounded/openmp");
BENCHMARK(closedness<static_cast<ClosednessFn>(serial::closedness_search)>)->Name("closedness_search/serial");
BENCHMARK(closedness<static_cast<ClosednessFn>(closedness_search)>)->Name("closedness_search/openmp");
BENCHMARK(permuted<static_cast<PermutedFn>(serial::permuted_equal)>)->Name("permuted_equal/serial");
BENCHMARK(permuted<static_cast<PermutedFn>(permuted_equal)>)->Name("permuted_equal/openmp");

}  // namespace
}  // namespace torusconj

BENCHMARK_MAIN();
