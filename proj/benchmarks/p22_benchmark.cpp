// Copyright 2026 The p22 Authors
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

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "p22/audit.hpp"
#include "p22/canonical.hpp"
#include "p22/constructions.hpp"
#include "p22/detect.hpp"
#include "p22/recognizer.hpp"
#include "p22/search.hpp"

namespace p22 {
namespace {

Digraph Member(int n) { return extremal_member(n); }

Digraph Shuffled(const Digraph& d, std::uint64_t seed) {
  std::vector<Vertex> perm(static_cast<std::size_t>(d.order()));
  for (Vertex v = 0; v < d.order(); ++v) perm[static_cast<std::size_t>(v)] = v;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(d, perm);
}

std::pair<Vertex, Vertex> FirstNonArc(const Digraph& d) {
  for (Vertex a : d.vertices()) {
    for (Vertex b : d.vertices()) {
      if (a != b && !d.has_arc(a, b)) return {a, b};
    }
  }
  return {0, 1};
}

void BM_IsFree(benchmark::State& state) {
  const Digraph d = Member(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_free(d));
}
BENCHMARK(BM_IsFree)->Arg(13)->Arg(24)->Arg(48)->Arg(64);

void BM_StaysFreeAfter(benchmark::State& state) {
  const Digraph d = Member(static_cast<int>(state.range(0)));
  const auto [a, b] = FirstNonArc(d);
  for (auto _ : state) benchmark::DoNotOptimize(stays_free_after(d, a, b));
}
BENCHMARK(BM_StaysFreeAfter)->Arg(13)->Arg(64);

void BM_CanonicalForm(benchmark::State& state) {
  const Digraph d = Shuffled(Member(static_cast<int>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->Arg(13)->Arg(20)->Arg(32);

void BM_Classify(benchmark::State& state) {
  const Digraph d = Shuffled(Member(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(d));
}
BENCHMARK(BM_Classify)->Arg(13)->Arg(16)->Arg(20);

void BM_AuditAll(benchmark::State& state) {
  const Digraph d = Member(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_all(d));
}
BENCHMARK(BM_AuditAll)->Arg(16)->Arg(32);

void BM_BranchAndBound(benchmark::State& state) {
  SearchConfig config;
  config.n = static_cast<int>(state.range(0));
  config.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_free_branch_and_bound(config));
  }
}
BENCHMARK(BM_BranchAndBound)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace p22

BENCHMARK_MAIN();
