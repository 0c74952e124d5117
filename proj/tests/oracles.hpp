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

// Deliberately naive reference implementations. They only use has_arc and
// order(), never the bit-parallel internals they are compared against.

#ifndef P22_TESTS_ORACLES_HPP_
#define P22_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "p22/detect.hpp"
#include "p22/digraph.hpp"

namespace p22::oracle {

// Four nested loops over (u1, u2, u3, u4).
inline bool HasP22(const Digraph& d) {
  const int n = d.order();
  for (int u1 = 0; u1 < n; ++u1)
    for (int u2 = 0; u2 < n; ++u2)
      for (int u3 = u2 + 1; u3 < n; ++u3)
        for (int u4 = 0; u4 < n; ++u4) {
          if (u1 == u4 || u1 == u2 || u1 == u3 || u4 == u2 || u4 == u3) {
            continue;
          }
          if (d.has_arc(u1, u2) && d.has_arc(u2, u4) && d.has_arc(u1, u3) &&
              d.has_arc(u3, u4)) {
            return true;
          }
        }
  return false;
}

// Ordered pairs (a, b), a != b, with at least two a -> m -> b paths.
inline int CountPairsWithTwoMiddles(const Digraph& d) {
  const int n = d.order();
  int pairs = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int middles = 0;
      for (int m = 0; m < n; ++m) {
        if (m != a && m != b && d.has_arc(a, m) && d.has_arc(m, b)) ++middles;
      }
      if (middles >= 2) ++pairs;
    }
  return pairs;
}

inline int ArcsBetween(const Digraph& d, const std::vector<int>& s,
                       const std::vector<int>& t) {
  int count = 0;
  for (int u : s)
    for (int v : t)
      if (u != v && d.has_arc(u, v)) ++count;
  return count;
}

inline bool Matches(const Digraph& d, const std::vector<int>& s,
                    const std::vector<int>& t) {
  for (int u : s) {
    int succ = 0;
    for (int v : t) succ += d.has_arc(u, v) ? 1 : 0;
    if (succ != 1) return false;
  }
  for (int v : t) {
    int pred = 0;
    for (int u : s) pred += d.has_arc(u, v) ? 1 : 0;
    if (pred != 1) return false;
  }
  return true;
}

// max over u of |N+(u) \ N+(v)|, straight from the definition.
inline int Alpha(const Digraph& d, int v) {
  int best = 0;
  for (int u = 0; u < d.order(); ++u) {
    int count = 0;
    for (int w = 0; w < d.order(); ++w) {
      if (d.has_arc(u, w) && !d.has_arc(v, w)) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

// Tries all n! bijections.
inline bool Isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  const int n = a.order();
  std::vector<int> f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (u != v && a.has_arc(u, v) != b.has_arc(f[u], f[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

// Ordered pairs in the fixed order (0,1), (0,2), ..., used to decode masks.
inline std::vector<std::pair<int, int>> OrderedPairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  return pairs;
}

inline Digraph FromMask(int n, std::uint64_t mask) {
  Digraph d(n);
  const auto pairs = OrderedPairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1U) d.add_arc(pairs[i].first, pairs[i].second);
  }
  return d;
}

inline Digraph Random(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Digraph d(n);
  for (const auto& [u, v] : OrderedPairs(n)) {
    if (coin(rng)) d.add_arc(u, v);
  }
  return d;
}

// Inserts arcs in random order, keeping each one only if the digraph stays
// free under the naive checker. Stops after `attempts` candidate arcs.
inline Digraph RandomFree(int n, std::mt19937_64& rng, int attempts = -1) {
  auto pairs = OrderedPairs(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  if (attempts >= 0 && attempts < static_cast<int>(pairs.size())) {
    pairs.resize(static_cast<std::size_t>(attempts));
  }
  Digraph d(n);
  for (const auto& [u, v] : pairs) {
    d.add_arc(u, v);
    if (HasP22(d)) d.remove_arc(u, v);
  }
  return d;
}

inline std::vector<int> RandomPermutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// perm[v] is the new label of v.
inline Digraph Permute(const Digraph& d, const std::vector<int>& perm) {
  Digraph out(d.order());
  for (int u = 0; u < d.order(); ++u)
    for (int v = 0; v < d.order(); ++v)
      if (u != v && d.has_arc(u, v)) out.add_arc(perm[u], perm[v]);
  return out;
}

inline std::vector<int> Range(int begin, int end) {
  std::vector<int> out;
  for (int v = begin; v < end; ++v) out.push_back(v);
  return out;
}

// With the arcs between the two roots 0 and 1 removed, checks that every
// other vertex is reached from exactly one root along a unique directed path
// of length <= 2 (BFS), and that nothing else is reachable.
inline bool IsDoubleArborescence(const Digraph& d) {
  const int n = d.order();
  std::vector<int> reached_by(static_cast<std::size_t>(n), 0);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  for (int root : {0, 1}) {
    std::vector<int> frontier{root};
    depth[root] = 0;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int u : frontier) {
        for (int w = 0; w < n; ++w) {
          if (!d.has_arc(u, w) || w == 0 || w == 1) continue;
          if (++reached_by[w] > 1) return false;
          depth[w] = depth[u] + 1;
          if (depth[w] > 2) return false;
          next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
  }
  for (int v = 2; v < n; ++v) {
    if (reached_by[v] != 1) return false;
  }
  for (int u = 2; u < n; ++u) {
    if (d.has_arc(u, 0) || d.has_arc(u, 1)) return false;
  }
  return d.has_arc(0, 1) && d.has_arc(1, 0);
}

}  // namespace p22::oracle

#endif  // P22_TESTS_ORACLES_HPP_
