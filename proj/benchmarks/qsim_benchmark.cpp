// Copyright 2026 The decaycode Authors
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

#include "benchmark/benchmark.h"
#include "decaycode/codegen.hpp"
#include "decaycode/noise.hpp"

using namespace decaycode;

static void BM_EncoderProgram(benchmark::State& state) {
  const Encoder enc = encoder_program();
  Amplitudes a(256);
  a[0] = 0.6;
  a[qubit_mask(8, enc.data_qubit)] = 0.8;
  const QState reg(8, a);
  for (auto _ : state) benchmark::DoNotOptimize(run_program(reg, enc.program));
  state.SetItemsProcessed(state.iterations() * enc.program.gates.size());
}
BENCHMARK(BM_EncoderProgram);

static void BM_ConditionalEvolve(benchmark::State& state) {
  const QState psi = encode(eight_bit_code(), LogicalQubit::normalized(1.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(conditional_evolve(psi, {0.7}));
}
BENCHMARK(BM_ConditionalEvolve);

static void BM_Trajectory(benchmark::State& state) {
  const QState psi = encode(eight_bit_code(), LogicalQubit::normalized(1.0, 1.0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_trajectory(psi, {0.5, ++seed, 2}));
}
BENCHMARK(BM_Trajectory);
