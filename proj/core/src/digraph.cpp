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

#include "p22/digraph.hpp"

#include <algorithm>
#include <string>

#include "p22/error.hpp"

namespace p22 {
namespace {

constexpr std::uint64_t Bit(Vertex v) { return std::uint64_t{1} << v; }

void CheckSetFits(const Digraph& d, VertexSet s, const char* what) {
  if ((s - d.vertices()).bits() != 0) {
    throw RangeError(std::string(what) + " has members outside 0.." +
                     std::to_string(d.order() - 1));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::Range(Vertex begin, Vertex end) {
  begin = std::max(begin, 0);
  end = std::min(end, kMaxVertices);
  if (end <= begin) return VertexSet();
  const std::uint64_t upto_end =
      end == kMaxVertices ? ~std::uint64_t{0} : Bit(end) - 1;
  const std::uint64_t below_begin = Bit(begin) - 1;
  return VertexSet(upto_end & ~below_begin);
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= kMaxVertices) {
    throw RangeError("vertex " + std::to_string(v) + " outside VertexSet range");
  }
  bits_ |= Bit(v);
}

void VertexSet::erase(Vertex v) {
  if (v >= 0 && v < kMaxVertices) bits_ &= ~Bit(v);
}

std::vector<Vertex> VertexSet::to_vector() const {
  return std::vector<Vertex>(begin(), end());
}

Digraph::Digraph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw SizeError("digraph order " + std::to_string(n) +
                    " outside 1.." + std::to_string(kMaxVertices));
  }
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw RangeError("vertex " + std::to_string(v) + " outside 0.." +
                     std::to_string(n_ - 1));
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (out_[u] & Bit(v)) != 0;
}

void Digraph::add_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
  if ((out_[u] & Bit(v)) != 0) return;
  out_[u] |= Bit(v);
  in_[v] |= Bit(u);
  ++arcs_;
}

void Digraph::remove_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if ((out_[u] & Bit(v)) == 0) return;
  out_[u] &= ~Bit(v);
  in_[v] &= ~Bit(u);
  --arcs_;
}

VertexSet Digraph::out_neighbors(Vertex u) const {
  check_vertex(u);
  return VertexSet(out_[u]);
}

VertexSet Digraph::in_neighbors(Vertex u) const {
  check_vertex(u);
  return VertexSet(in_[u]);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(static_cast<std::size_t>(arcs_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(out_[u])) result.emplace_back(u, v);
  }
  return result;
}

Digraph with_arc(Digraph d, Vertex u, Vertex v) {
  d.add_arc(u, v);
  return d;
}

Digraph reverse(const Digraph& d) {
  Digraph r(d.order());
  for (const auto& [u, v] : d.arcs()) r.add_arc(v, u);
  return r;
}

Digraph induced_subdigraph(const Digraph& d, VertexSet keep) {
  CheckSetFits(d, keep, "induced vertex set");
  if (keep.empty()) throw SizeError("induced subdigraph on empty vertex set");
  std::vector<Vertex> index(static_cast<std::size_t>(d.order()), -1);
  Vertex next = 0;
  for (Vertex v : keep) index[v] = next++;
  Digraph sub(keep.size());
  for (Vertex u : keep) {
    for (Vertex v : d.out_neighbors(u) & keep) sub.add_arc(index[u], index[v]);
  }
  return sub;
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
  const int n = d.order();
  if (static_cast<int>(perm.size()) != n) {
    throw ContractError("relabel: permutation length differs from order");
  }
  std::uint64_t seen = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || (seen & Bit(p)) != 0) {
      throw ContractError("relabel: not a permutation");
    }
    seen |= Bit(p);
  }
  Digraph out(n);
  for (const auto& [u, v] : d.arcs()) out.add_arc(perm[u], perm[v]);
  return out;
}

int arcs_between(const Digraph& d, VertexSet from, VertexSet to) {
  CheckSetFits(d, from, "source set");
  CheckSetFits(d, to, "target set");
  const auto rows = d.out_rows();
  int total = 0;
  for (Vertex u : from) total += std::popcount(rows[u] & to.bits());
  return total;
}

bool matches(const Digraph& d, VertexSet from, VertexSet to) {
  CheckSetFits(d, from, "source set");
  CheckSetFits(d, to, "target set");
  if (!(from & to).empty()) {
    throw ContractError("matches: source and target sets intersect");
  }
  if (from.size() != to.size()) return false;
  const auto out = d.out_rows();
  const auto in = d.in_rows();
  for (Vertex u : from) {
    if (std::popcount(out[u] & to.bits()) != 1) return false;
  }
  for (Vertex v : to) {
    if (std::popcount(in[v] & from.bits()) != 1) return false;
  }
  return true;
}

int tau(const Digraph& d, Vertex v) {
  return (d.out_neighbors(v) & d.in_neighbors(v)).size();
}

int alpha(const Digraph& d, Vertex v) {
  const VertexSet outside = d.vertices() - d.out_neighbors(v);
  int best = 0;
  for (Vertex u = 0; u < d.order(); ++u) {
    best = std::max(best, (d.out_neighbors(u) & outside).size());
  }
  return best;
}

int max_out_degree(const Digraph& d) {
  int k = 0;
  for (Vertex u = 0; u < d.order(); ++u) k = std::max(k, d.out_degree(u));
  return k;
}

VertexSet max_out_degree_vertices(const Digraph& d) {
  const int k = max_out_degree(d);
  VertexSet result;
  for (Vertex u = 0; u < d.order(); ++u) {
    if (d.out_degree(u) == k) result.insert(u);
  }
  return result;
}

}  // namespace p22
