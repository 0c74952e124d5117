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

#ifndef P22_DIGRAPH_HPP_
#define P22_DIGRAPH_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace p22 {

using Vertex = int;

// Upper bound on the order of a Digraph; one 64-bit word per adjacency row.
inline constexpr int kMaxVertices = 64;

// A subset of {0, ..., 63} stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members);

  // {begin, ..., end - 1}; empty when end <= begin.
  static VertexSet Range(Vertex begin, Vertex end);
  static VertexSet All(int n) { return Range(0, n); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const {
    return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U) != 0;
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest member, or -1 when empty.
  constexpr Vertex min() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  void insert(Vertex v);
  void erase(Vertex v);

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }
  std::vector<Vertex> to_vector() const;

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  // Set difference.
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Strict digraph on vertices 0..n-1: no loops, at most one arc per ordered
// pair. Rows are kept in both directions so predecessor queries are a single
// word load.
class Digraph {
 public:
  // Throws SizeError unless 1 <= n <= kMaxVertices.
  explicit Digraph(int n);

  int order() const { return n_; }
  int arc_count() const { return arcs_; }

  // Throws RangeError for out-of-range endpoints.
  bool has_arc(Vertex u, Vertex v) const;

  // Idempotent. Throws LoopError for u == v and RangeError when out of range.
  void add_arc(Vertex u, Vertex v);
  // Idempotent; removing an absent arc is a no-op.
  void remove_arc(Vertex u, Vertex v);

  VertexSet out_neighbors(Vertex u) const;
  VertexSet in_neighbors(Vertex u) const;
  int out_degree(Vertex u) const { return out_neighbors(u).size(); }
  int in_degree(Vertex u) const { return in_neighbors(u).size(); }

  VertexSet vertices() const { return VertexSet::All(n_); }

  // All arcs in lexicographic (tail, head) order.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  // Raw rows, length order(): bit v of out_rows()[u] is set iff u -> v.
  std::span<const std::uint64_t> out_rows() const {
    return {out_.data(), static_cast<std::size_t>(n_)};
  }
  std::span<const std::uint64_t> in_rows() const {
    return {in_.data(), static_cast<std::size_t>(n_)};
  }

  bool operator==(const Digraph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  int arcs_ = 0;
  std::array<std::uint64_t, kMaxVertices> out_{};
  std::array<std::uint64_t, kMaxVertices> in_{};
};

// Functional form of Digraph::add_arc.
Digraph with_arc(Digraph d, Vertex u, Vertex v);

// Every arc direction flipped.
Digraph reverse(const Digraph& d);

// Subdigraph induced by `keep`, relabelled 0..|keep|-1 in increasing order.
Digraph induced_subdigraph(const Digraph& d, VertexSet keep);

// Image of `d` under the bijection v -> perm[v]. Throws ContractError when
// `perm` is not a permutation of 0..order()-1.
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

// e(S, T): number of arcs with tail in S and head in T.
int arcs_between(const Digraph& d, VertexSet from, VertexSet to);

// True iff the arcs from S to T form a perfect matching S -> T: every member
// of S has exactly one successor in T and every member of T exactly one
// predecessor in S. Throws ContractError when S and T intersect.
bool matches(const Digraph& d, VertexSet from, VertexSet to);

// Number of vertices that are both successors and predecessors of v.
int tau(const Digraph& d, Vertex v);

// Max over all u of |N+(u) \ N+(v)|.
int alpha(const Digraph& d, Vertex v);

int max_out_degree(const Digraph& d);
VertexSet max_out_degree_vertices(const Digraph& d);

}  // namespace p22

#endif  // P22_DIGRAPH_HPP_
