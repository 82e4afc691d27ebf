// Copyright 2026 The Fockrail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "fockrail/functor.hpp"
#include "fockrail/measurement.hpp"
#include "fockrail/random_unitary.hpp"

using namespace fockrail;

namespace {

UnitaryMatrix fixed_unitary(int dim) {
  std::mt19937_64 rng(2026);
  return random_unitary(dim, rng);
}

FockVector spread_state(int modes, int photons) {
  const FockSector sector(modes, photons);
  FockVector v(modes, photons);
  const double a = 1.0 / std::sqrt(static_cast<double>(std::min<std::size_t>(sector.size(), 16)));
  for (std::size_t i = 0; i < sector.size() && i < 16; ++i) v.add(sector[i], a);
  return v;
}

OutcomeDistribution flat_distribution(int outcomes) {
  OutcomeDistribution d;
  for (int k = 0; k < outcomes; ++k) d.entries[OccupationVector{k, outcomes - k}] = 1.0 / outcomes;
  return d;
}

void BM_SectorMatrixSerial(benchmark::State& state) {
  const UnitaryMatrix u = fixed_unitary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sector_matrix_serial(u, static_cast<int>(state.range(1))));
}

void BM_SectorMatrix(benchmark::State& state) {
  const UnitaryMatrix u = fixed_unitary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sector_matrix(u, static_cast<int>(state.range(1))));
}

void BM_ApplySerial(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const UnitaryMatrix u = fixed_unitary(modes);
  const FockVector v = spread_state(modes, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_serial(u, v));
}

void BM_Apply(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const UnitaryMatrix u = fixed_unitary(modes);
  const FockVector v = spread_state(modes, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(apply(u, v));
}

void BM_SampleSerial(benchmark::State& state) {
  const OutcomeDistribution d = flat_distribution(64);
  for (auto _ : state) benchmark::DoNotOptimize(sample_distribution_serial(d, static_cast<std::uint64_t>(state.range(0)), 1));
}

void BM_Sample(benchmark::State& state) {
  const OutcomeDistribution d = flat_distribution(64);
  for (auto _ : state) benchmark::DoNotOptimize(sample_distribution(d, static_cast<std::uint64_t>(state.range(0)), 1));
}

}  // namespace

BENCHMARK(BM_SectorMatrixSerial)->Args({4, 4})->Args({6, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SectorMatrix)->Args({4, 4})->Args({6, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplySerial)->Args({4, 6})->Args({3, 14})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Apply)->Args({4, 6})->Args({3, 14})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
