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

// Direct computation of the largest P(2,2)-free digraph of small order.

#ifndef P22_SEARCH_HPP_
#define P22_SEARCH_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "p22/digraph.hpp"

namespace p22 {

// Name of the environment variable read for the worker count when
// SearchConfig::threads is 0. Unset or invalid means one thread.
inline constexpr const char* kThreadsEnvVar = "P22_THREADS";

struct SearchConfig {
  int n = 1;
  // Known achievable size; the search only looks for strictly larger ones
  // (or equal ones when collecting witnesses). Must not exceed the true
  // maximum, or `optimal` loses its meaning.
  std::optional<int> seed_lower_bound;
  // A P(2,2)-free digraph of order n to start from; its size acts as a seed.
  std::optional<Digraph> seed_witness;
  // 0 means unlimited.
  std::int64_t node_limit = 0;
  std::chrono::milliseconds time_limit{0};
  bool collect_witnesses = false;
  // 0 means read kThreadsEnvVar.
  int threads = 0;
};

struct SearchResult {
  int best_arcs = 0;
  // True iff the whole space was covered without hitting a limit.
  bool optimal = false;
  // P(2,2)-free digraphs with best_arcs arcs, one per isomorphism class,
  // sorted by canonical form. Without collect_witnesses at most one.
  std::vector<Digraph> witnesses;
  std::int64_t nodes = 0;
};

// Tests all 2^(n(n-1)) labelled digraphs. Throws DomainError unless
// 1 <= n <= 5.
SearchResult max_free_exhaustive(int n, bool collect_witnesses = true);

// Depth-first over ordered pairs (both directions of an unordered pair in
// succession), adding an arc only if the digraph stays free, pruning when
// even taking every remaining pair cannot beat the incumbent.
SearchResult max_free_branch_and_bound(const SearchConfig& config);

// Family member used as the constructive lower bound at order n >= 13:
// D1 for odd n, D3 when n/2 is even, D4 otherwise.
Digraph extremal_member(int n);

// Builds extremal_member(n) and checks it is free with ex_formula(n) arcs.
// Throws DomainError for n < 13.
bool verify_lower_bound(int n);

// Worker count from kThreadsEnvVar, at least 1.
int threads_from_env();

}  // namespace p22

#endif  // P22_SEARCH_HPP_
