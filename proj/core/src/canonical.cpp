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

#include "p22/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <tuple>
#include <utility>

namespace p22 {
namespace {

constexpr std::uint64_t Bit(Vertex v) { return std::uint64_t{1} << v; }

// Ordered partition of the vertex set; each cell is a bitmask.
using Cells = std::vector<std::uint64_t>;

Cells InitialCells(const Digraph& d) {
  const auto out = d.out_rows();
  const auto in = d.in_rows();
  std::vector<std::pair<std::tuple<int, int, int>, Vertex>> keyed;
  for (Vertex v = 0; v < d.order(); ++v) {
    keyed.push_back({{std::popcount(out[v]), std::popcount(in[v]),
                      std::popcount(out[v] & in[v])},
                     v});
  }
  std::sort(keyed.begin(), keyed.end());
  Cells cells;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) cells.push_back(0);
    cells.back() |= Bit(keyed[i].second);
  }
  return cells;
}

// Splits cells until every vertex in a cell has the same number of out- and
// in-neighbours in every cell. The result depends only on the digraph and
// the input partition, never on vertex labels.
void Refine(const Digraph& d, Cells& cells) {
  const auto out = d.out_rows();
  const auto in = d.in_rows();
  std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> sigs;
  for (;;) {
    Cells next;
    next.reserve(static_cast<std::size_t>(d.order()));
    bool split = false;
    for (std::uint64_t cell : cells) {
      if (std::popcount(cell) == 1) {
        next.push_back(cell);
        continue;
      }
      sigs.clear();
      for (Vertex v : VertexSet(cell)) {
        std::vector<std::uint32_t> sig(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
          sig[j] = (static_cast<std::uint32_t>(std::popcount(out[v] & cells[j]))
                    << 8) |
                   static_cast<std::uint32_t>(std::popcount(in[v] & cells[j]));
        }
        sigs.emplace_back(std::move(sig), v);
      }
      std::sort(sigs.begin(), sigs.end());
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (i == 0 || sigs[i].first != sigs[i - 1].first) {
          if (i != 0) split = true;
          next.push_back(0);
        }
        next.back() |= Bit(sigs[i].second);
      }
    }
    cells = std::move(next);
    if (!split) return;
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

class LabelSearch {
 public:
  explicit LabelSearch(const Digraph& d) : d_(d), n_(d.order()) {}

  CanonicalLabeling run() {
    Cells cells = InitialCells(d_);
    Refine(d_, cells);
    visit(cells);
    CanonicalLabeling result;
    result.form = CanonicalForm(n_, best_key_);
    result.label.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) result.label[best_perm_[i]] = i;
    result.leaves = leaves_;
    return result;
  }

 private:
  static constexpr int kNoJump = -1;

  bool on_first_path() const {
    return have_first_ && path_.size() < first_path_.size() &&
           std::equal(path_.begin(), path_.end(), first_path_.begin());
  }

  // True if `v` shares an orbit with an already explored sibling under the
  // automorphisms found so far that fix the current path pointwise.
  bool equivalent_to_explored(Vertex v, std::uint64_t explored) const {
    if (explored == 0 || generators_.empty()) return false;
    UnionFind orbits(n_);
    for (const auto& gamma : generators_) {
      bool fixes_path = std::all_of(path_.begin(), path_.end(),
                                    [&](Vertex p) { return gamma[p] == p; });
      if (!fixes_path) continue;
      for (int x = 0; x < n_; ++x) orbits.unite(x, gamma[x]);
    }
    const int root = orbits.find(v);
    for (Vertex u : VertexSet(explored)) {
      if (orbits.find(u) == root) return true;
    }
    return false;
  }

  // Returns kNoJump, or the depth of the ancestor at which the search should
  // resume with that ancestor's next child.
  int visit(const Cells& cells) {
    const int depth = static_cast<int>(path_.size());
    std::size_t target = cells.size();
    int target_size = kMaxVertices + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int size = std::popcount(cells[i]);
      if (size > 1 && size < target_size) {
        target_size = size;
        target = i;
      }
    }
    if (target == cells.size()) return leaf(cells);

    std::uint64_t explored = 0;
    for (Vertex v : VertexSet(cells[target])) {
      if (on_first_path() && equivalent_to_explored(v, explored)) continue;
      explored |= Bit(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(Bit(v));
          child.push_back(cells[i] & ~Bit(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      Refine(d_, child);
      path_.push_back(v);
      const int jump = visit(child);
      path_.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  static int common_prefix(const std::vector<Vertex>& a,
                           const std::vector<Vertex>& b) {
    const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return static_cast<int>(ia - a.begin());
  }

  void record_automorphism(const std::vector<Vertex>& perm,
                           const std::vector<Vertex>& reference) {
    std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[perm[i]] = reference[i];
    generators_.push_back(std::move(gamma));
  }

  int leaf(const Cells& cells) {
    ++leaves_;
    std::vector<Vertex> perm(static_cast<std::size_t>(n_));
    std::array<int, kMaxVertices> position{};
    for (int i = 0; i < n_; ++i) {
      perm[i] = std::countr_zero(cells[i]);
      position[perm[i]] = i;
    }
    const auto out = d_.out_rows();
    std::vector<std::uint64_t> key(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (Vertex w : VertexSet(out[perm[i]])) key[i] |= Bit(position[w]);
    }

    if (!have_first_) {
      have_first_ = true;
      first_key_ = best_key_ = key;
      first_perm_ = best_perm_ = perm;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (key == first_key_) {
      record_automorphism(perm, first_perm_);
      return common_prefix(path_, first_path_);
    }
    if (key == best_key_) {
      record_automorphism(perm, best_perm_);
      return common_prefix(path_, best_path_);
    }
    if (key < best_key_) {
      best_key_ = std::move(key);
      best_perm_ = std::move(perm);
      best_path_ = path_;
    }
    return kNoJump;
  }

  const Digraph& d_;
  const int n_;
  std::vector<Vertex> path_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_key_, best_key_;
  std::vector<Vertex> first_perm_, best_perm_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<std::vector<Vertex>> generators_;
  long leaves_ = 0;
};

std::vector<std::pair<int, int>> DegreePairs(const Digraph& d) {
  std::vector<std::pair<int, int>> degrees;
  for (Vertex v = 0; v < d.order(); ++v) {
    degrees.emplace_back(d.out_degree(v), d.in_degree(v));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

std::string CanonicalForm::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s += kDigits[(order_ >> 4) & 0xF];
  s += kDigits[order_ & 0xF];
  const int width = (order_ + 3) / 4;
  for (std::uint64_t row : rows_) {
    for (int i = width - 1; i >= 0; --i) s += kDigits[(row >> (4 * i)) & 0xF];
  }
  return s;
}

Digraph CanonicalForm::to_digraph() const {
  Digraph d(order_);
  for (int i = 0; i < order_; ++i) {
    for (Vertex j : VertexSet(rows_[i])) d.add_arc(i, j);
  }
  return d;
}

CanonicalLabeling canonical_labeling(const Digraph& d) {
  return LabelSearch(d).run();
}

CanonicalForm canonical_form(const Digraph& d) {
  return canonical_labeling(d).form;
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  if (DegreePairs(a) != DegreePairs(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace p22
