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
#include "decaycode/decode.hpp"

using namespace decaycode;

static void BM_BuildSyndromeTable(benchmark::State& state) {
  const CodeSpec code = eight_bit_code();
  const Encoder enc = encoder_program();
  for (auto _ : state) benchmark::DoNotOptimize(build_syndrome_table(code, enc));
}
BENCHMARK(BM_BuildSyndromeTable)->Unit(benchmark::kMillisecond);

static void BM_FullCycle(benchmark::State& state) {
  const Corrector& c = Corrector::eight_bit();
  const LogicalQubit q = LogicalQubit::normalized(0.6, Complex{0.0, 0.8});
  const Error e = parse_error("A_3P_3");
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_cycle(c, q, {DecaySegment{0.5}, e, DecaySegment{1.0}}, ++seed));
  }
}
BENCHMARK(BM_FullCycle);
