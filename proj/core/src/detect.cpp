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

#include "p22/detect.hpp"

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

#include "p22/error.hpp"

namespace p22 {
namespace {

constexpr std::uint64_t Bit(Vertex v) { return std::uint64_t{1} << v; }

// Middles of (a, b), excluding a and b themselves.
inline std::uint64_t Middles(std::span<const std::uint64_t> out,
                             std::span<const std::uint64_t> in, Vertex a,
                             Vertex b) {
  return out[a] & in[b] & ~(Bit(a) | Bit(b));
}

}  // namespace

bool is_valid_witness(const Digraph& d, const P22Witness& w) {
  const int n = d.order();
  for (Vertex v : {w.u1, w.u2, w.u3, w.u4}) {
    if (v < 0 || v >= n) return false;
  }
  if (w.u1 == w.u4 || w.u2 == w.u3) return false;
  return d.has_arc(w.u1, w.u2) && d.has_arc(w.u2, w.u4) &&
         d.has_arc(w.u1, w.u3) && d.has_arc(w.u3, w.u4);
}

std::optional<P22Witness> find_witness(const Digraph& d) {
  const int n = d.order();
  const auto out = d.out_rows();
  const auto in = d.in_rows();
  for (Vertex a = 0; a < n; ++a) {
    if (std::popcount(out[a]) < 2) continue;
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      std::uint64_t mid = Middles(out, in, a, b);
      if (std::popcount(mid) >= 2) {
        const Vertex first = std::countr_zero(mid);
        mid &= mid - 1;
        return P22Witness{a, first, std::countr_zero(mid), b};
      }
    }
  }
  return std::nullopt;
}

bool is_free(const Digraph& d) { return !find_witness(d).has_value(); }

bool stays_free_after(const Digraph& d, Vertex a, Vertex b) {
  if (a == b) throw ContractError("stays_free_after: loop arc");
  if (d.has_arc(a, b)) {
    throw ContractError("stays_free_after: arc (" + std::to_string(a) + "," +
                        std::to_string(b) + ") already present");
  }
  assert(is_free(d));
  const auto out = d.out_rows();
  const auto in = d.in_rows();

  // New arc as a first leg a -> b -> w: needs another a -> m -> w, m != b.
  for (Vertex w : VertexSet(out[b] & ~Bit(a))) {
    if ((out[a] & in[w] & ~Bit(b)) != 0) return false;
  }
  // New arc as a second leg u -> a -> b: needs another u -> m -> b, m != a.
  // a -> b is absent, so in[b] cannot contain a.
  for (Vertex u : VertexSet(in[a] & ~Bit(b))) {
    if ((out[u] & in[b]) != 0) return false;
  }
  return true;
}

int count_pairs_with_multi_middles(const Digraph& d) {
  const int n = d.order();
  const auto out = d.out_rows();
  const auto in = d.in_rows();
  int count = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b && std::popcount(Middles(out, in, a, b)) >= 2) ++count;
    }
  }
  return count;
}

}  // namespace p22
