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

// Detection of P(2,2), the orientation of C4 made of two directed 2-paths
// u1 -> u2 -> u4 and u1 -> u3 -> u4 with the same ends.
//
// A digraph contains P(2,2) iff some ordered pair (a, b), a != b, has at least
// two "middles" m with a -> m -> b. With bitmask rows the middles of (a, b)
// are out(a) & in(b), so a full check is n^2 word operations.

#ifndef P22_DETECT_HPP_
#define P22_DETECT_HPP_

#include <optional>

#include "p22/digraph.hpp"

namespace p22 {

// Arcs u1->u2, u2->u4, u1->u3, u3->u4 are present, u1 != u4, u2 < u3.
struct P22Witness {
  Vertex u1 = 0;
  Vertex u2 = 0;
  Vertex u3 = 0;
  Vertex u4 = 0;

  bool operator==(const P22Witness&) const = default;
};

// True iff `w` satisfies the witness invariants against `d`.
bool is_valid_witness(const Digraph& d, const P22Witness& w);

// Lexicographically smallest (u1, u4) pair with two middles, then the two
// smallest middles. std::nullopt iff `d` is P(2,2)-free.
std::optional<P22Witness> find_witness(const Digraph& d);

bool is_free(const Digraph& d);

// Whether d + (a, b) is still P(2,2)-free, given that d is. Only copies that
// use the new arc are examined: O(n) word operations.
// Throws ContractError if a == b or the arc is already present.
bool stays_free_after(const Digraph& d, Vertex a, Vertex b);

// Ordered pairs (a, b) with at least two middles; zero iff free.
int count_pairs_with_multi_middles(const Digraph& d);

}  // namespace p22

#endif  // P22_DETECT_HPP_
