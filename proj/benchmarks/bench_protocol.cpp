// Copyright 2026 The ckss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "ckss/adversary.h"
#include "ckss/engine.h"

namespace {

using namespace ckss;

Config make_config(ProtocolKind kind, std::size_t n, bool mask = false) {
  Config c;
  c.n = n;
  c.kind = kind;
  c.master_seed = 7;
  c.initiator_mask = mask;
  return c;
}

void BM_RunCk(benchmark::State& state) {
  const Config c = make_config(ProtocolKind::kCkSecureSum, static_cast<std::size_t>(state.range(0)));
  const auto inputs = random_inputs(c.n, c.modulus, 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_protocol(c, inputs).announced);
  state.counters["messages"] = static_cast<double>(c.n * (c.n - 1));
}
BENCHMARK(BM_RunCk)->RangeMultiplier(2)->Range(4, 64);

void BM_RunClifton(benchmark::State& state) {
  const Config c = make_config(ProtocolKind::kCliftonSum, static_cast<std::size_t>(state.range(0)));
  const auto inputs = random_inputs(c.n, c.modulus, 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_protocol(c, inputs).announced);
}
BENCHMARK(BM_RunClifton)->RangeMultiplier(2)->Range(4, 64);

// Full pipeline for one pair: view extraction, elimination, per-victim queries.
void BM_AnalyzePair(benchmark::State& state) {
  const Config c = make_config(ProtocolKind::kCkSecureSum, static_cast<std::size_t>(state.range(0)));
  const RunResult run = run_protocol(c, random_inputs(c.n, c.modulus, 1));
  const Coalition pair({PartyId{2}, PartyId{c.n - 1}}, c.n);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_run(run, pair).verdicts.size());
}
BENCHMARK(BM_AnalyzePair)->DenseRange(4, 16, 4);

void BM_LinearOracleBuild(benchmark::State& state) {
  const Config c = make_config(ProtocolKind::kCkSecureSum, static_cast<std::size_t>(state.range(0)));
  const RunResult run = run_protocol(c, random_inputs(c.n, c.modulus, 1));
  const Coalition pair({PartyId{2}, PartyId{3}}, c.n);
  const CoalitionView view = extract_view(run.transcript, pair, own_knowledge(run, pair));
  for (auto _ : state) benchmark::DoNotOptimize(LinearOracle(view).rank());
}
BENCHMARK(BM_LinearOracleBuild)->DenseRange(4, 16, 4);

void BM_PairSweep(benchmark::State& state) {
  const Config c = make_config(ProtocolKind::kCkSecureSum, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_pair_sweep(c, 1).entries.size());
}
BENCHMARK(BM_PairSweep)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
