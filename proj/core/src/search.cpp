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

#include "p22/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "p22/canonical.hpp"
#include "p22/constructions.hpp"
#include "p22/detect.hpp"
#include "p22/error.hpp"

namespace p22 {
namespace {

using Clock = std::chrono::steady_clock;
using Pair = std::pair<Vertex, Vertex>;

// Unordered pairs in lexicographic order, each as (i, j) then (j, i).
std::vector<Pair> DecisionOrder(int n) {
  std::vector<Pair> order;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      order.emplace_back(i, j);
      order.emplace_back(j, i);
    }
  }
  return order;
}

// Keeps one witness per isomorphism class, in canonical-form order.
std::vector<Digraph> DedupByCanonicalForm(const std::vector<Digraph>& all) {
  std::map<CanonicalForm, const Digraph*> unique;
  for (const Digraph& d : all) unique.try_emplace(canonical_form(d), &d);
  std::vector<Digraph> out;
  out.reserve(unique.size());
  for (const auto& [form, d] : unique) out.push_back(*d);
  return out;
}

int ResolveThreads(int requested) {
  return requested > 0 ? requested : threads_from_env();
}

void RunWorkers(int threads, const std::function<void()>& body) {
  if (threads <= 1) {
    body();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
}

// Incumbent shared by all workers. `best` only grows.
class Incumbent {
 public:
  Incumbent(int best, bool collect) : best_(best), collect_(collect) {}

  int best() const { return best_.load(std::memory_order_relaxed); }

  void offer(const Digraph& d) {
    const int arcs = d.arc_count();
    if (arcs < best() || (arcs == best() && !collect_)) return;
    std::lock_guard<std::mutex> lock(mu_);
    const int current = best_.load(std::memory_order_relaxed);
    if (arcs > current) {
      best_.store(arcs, std::memory_order_relaxed);
      witnesses_.clear();
      witnesses_.push_back(d);
    } else if (arcs == current && (collect_ || witnesses_.empty())) {
      witnesses_.push_back(d);
    }
  }

  // Records a known digraph at the current best size, once.
  void seed(const Digraph& d) {
    std::lock_guard<std::mutex> lock(mu_);
    if (d.arc_count() == best_.load() && witnesses_.empty()) {
      witnesses_.push_back(d);
    }
  }

  std::vector<Digraph> take_witnesses() { return std::move(witnesses_); }

 private:
  std::atomic<int> best_;
  bool collect_;
  std::mutex mu_;
  std::vector<Digraph> witnesses_;
};

class BranchAndBound {
 public:
  BranchAndBound(const SearchConfig& config, Incumbent& incumbent)
      : config_(config),
        incumbent_(incumbent),
        order_(DecisionOrder(config.n)),
        start_(Clock::now()) {}

  // Prefix tasks of the first `depth` decisions, in depth-first order
  // (arc present before arc absent).
  std::vector<Digraph> prefixes(int depth) const {
    std::vector<Digraph> tasks{Digraph(config_.n)};
    for (int i = 0; i < depth; ++i) {
      std::vector<Digraph> next;
      for (const Digraph& d : tasks) {
        const auto [a, b] = order_[i];
        if (stays_free_after(d, a, b)) next.push_back(with_arc(d, a, b));
        next.push_back(d);
      }
      tasks = std::move(next);
    }
    return tasks;
  }

  void solve(Digraph d, int from) { descend(d, from); }

  bool aborted() const { return aborted_.load(std::memory_order_relaxed); }
  std::int64_t nodes() const { return nodes_.load(); }
  int decisions() const { return static_cast<int>(order_.size()); }

 private:
  bool out_of_budget() {
    const std::int64_t count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (config_.node_limit > 0 && count > config_.node_limit) {
      aborted_ = true;
    } else if (config_.time_limit.count() > 0 && (count & 1023) == 0 &&
               Clock::now() - start_ > config_.time_limit) {
      aborted_ = true;
    }
    return aborted();
  }

  void descend(Digraph& d, int index) {
    if (out_of_budget()) return;
    const int bound = d.arc_count() + (decisions() - index);
    const int best = incumbent_.best();
    if (config_.collect_witnesses ? bound < best : bound <= best) return;
    if (index == decisions()) {
      incumbent_.offer(d);
      return;
    }
    const auto [a, b] = order_[index];
    if (stays_free_after(d, a, b)) {
      d.add_arc(a, b);
      descend(d, index + 1);
      d.remove_arc(a, b);
      if (aborted()) return;
    }
    descend(d, index + 1);
  }

  const SearchConfig& config_;
  Incumbent& incumbent_;
  const std::vector<Pair> order_;
  const Clock::time_point start_;
  std::atomic<std::int64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

}  // namespace

int threads_from_env() {
  const char* raw = std::getenv(kThreadsEnvVar);
  if (raw == nullptr) return 1;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 1) return 1;
  return value;
}

SearchResult max_free_exhaustive(int n, bool collect_witnesses) {
  if (n < 1 || n > 5) {
    throw DomainError("exhaustive search supports 1 <= n <= 5 (got " +
                      std::to_string(n) + ")");
  }
  const std::vector<Pair> pairs = DecisionOrder(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const int threads = ResolveThreads(0);
  Incumbent incumbent(-1, collect_witnesses);
  std::atomic<std::uint64_t> next_chunk{0};
  constexpr std::uint64_t kChunk = 1 << 14;

  RunWorkers(threads, [&] {
    for (;;) {
      const std::uint64_t begin = next_chunk.fetch_add(kChunk);
      if (begin >= total) return;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const int arcs = std::popcount(mask);
        if (arcs < incumbent.best() ||
            (arcs == incumbent.best() && !collect_witnesses)) {
          continue;
        }
        Digraph d(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if ((mask >> i) & 1U) d.add_arc(pairs[i].first, pairs[i].second);
        }
        if (is_free(d)) incumbent.offer(d);
      }
    }
  });

  SearchResult result;
  result.best_arcs = incumbent.best();
  result.optimal = true;
  result.nodes = static_cast<std::int64_t>(total);
  auto witnesses = incumbent.take_witnesses();
  result.witnesses = DedupByCanonicalForm(witnesses);
  if (!collect_witnesses && result.witnesses.size() > 1) {
    result.witnesses.erase(result.witnesses.begin() + 1,
                            result.witnesses.end());
  }
  return result;
}

SearchResult max_free_branch_and_bound(const SearchConfig& config) {
  if (config.n < 1 || config.n > kMaxVertices) {
    throw SizeError("search order outside 1.." + std::to_string(kMaxVertices));
  }
  if (config.node_limit < 0 || config.time_limit.count() < 0) {
    throw ContractError("search limits must be non-negative");
  }
  // Unseeded searches start below zero so the first leaf is recorded.
  int seed = -1;
  if (config.seed_lower_bound) seed = std::max(seed, *config.seed_lower_bound);
  if (config.seed_witness) {
    const Digraph& w = *config.seed_witness;
    if (w.order() != config.n || !is_free(w)) {
      throw ContractError("seed witness must be P22-free of order n");
    }
    seed = std::max(seed, w.arc_count());
  }

  Incumbent incumbent(seed, config.collect_witnesses);
  if (config.seed_witness) incumbent.seed(*config.seed_witness);

  BranchAndBound bnb(config, incumbent);
  const int threads = ResolveThreads(config.threads);
  const int split_depth =
      threads > 1 ? std::min(bnb.decisions(), 12) : 0;
  const std::vector<Digraph> tasks = bnb.prefixes(split_depth);
  std::atomic<std::size_t> next_task{0};
  RunWorkers(threads, [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= tasks.size() || bnb.aborted()) return;
      bnb.solve(tasks[i], split_depth);
    }
  });

  SearchResult result;
  // Negative only when a limit fired before the first leaf.
  result.best_arcs = std::max(0, incumbent.best());
  result.optimal = !bnb.aborted();
  result.nodes = bnb.nodes();
  auto witnesses = incumbent.take_witnesses();
  result.witnesses = DedupByCanonicalForm(witnesses);
  if (!config.collect_witnesses && result.witnesses.size() > 1) {
    result.witnesses.erase(result.witnesses.begin() + 1,
                            result.witnesses.end());
  }
  return result;
}

Digraph extremal_member(int n) {
  if (n < 13) throw DomainError("extremal members are defined here for n >= 13");
  FamilyId family = FamilyId::kD4;
  if (n % 2 == 1) {
    family = FamilyId::kD1;
  } else if ((n / 2) % 2 == 0) {
    family = FamilyId::kD3;
  }
  return build_family(enumerate_params(family, n).front());
}

bool verify_lower_bound(int n) {
  const Digraph d = extremal_member(n);
  return is_free(d) && d.arc_count() == ex_formula(n);
}

}  // namespace p22
