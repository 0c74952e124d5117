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

// Builders for the extremal P(2,2)-free digraphs.
//
// Every family member of order n splits its vertices into a "top" part
// V1 = {0, ..., floor(n/2)} and a "bottom" part V2 = {floor(n/2)+1, ..., n-1}.
// The top part carries a small sparse digraph (S- or T-shaped components and
// 2-cycles), a matching sends almost every top vertex to a distinct bottom
// vertex, and bottom vertices broadcast to (almost) all of V1.
//
// Layout conventions, fixed so that builds are reproducible:
//   * y = 0 and z = 1 is the 2-cycle of the S component, z the star centre.
//   * In D4 the T component puts its roots at 0 and 1; in D5 the two
//     non-centre S vertices are 0 and 1 and their centres 2 and 3.
//   * Matchings pair the i-th matched top vertex with the i-th bottom vertex.
//   * Special bottom vertices (v, x, x1, x2) come first in V2.

#ifndef P22_CONSTRUCTIONS_HPP_
#define P22_CONSTRUCTIONS_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p22/digraph.hpp"

namespace p22 {

enum class FamilyId { kD1 = 1, kD2, kD3, kD4, kD5, kD6, kD7, kD8, kD9, kD10 };

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::kD1, FamilyId::kD2, FamilyId::kD3, FamilyId::kD4,
    FamilyId::kD5, FamilyId::kD6, FamilyId::kD7, FamilyId::kD8,
    FamilyId::kD9, FamilyId::kD10};

// "D1" ... "D10".
std::string to_string(FamilyId family);
// Accepts "D3", "d3" or "3".
std::optional<FamilyId> parse_family(std::string_view text);

// Whether the family exists at order n: D1, D2 need n odd, D3 needs
// n = 0 mod 4, D4..D10 need n even with n/2 odd.
bool family_admits_order(FamilyId family, int n);

// Which top vertex bottom vertex x avoids in D8.
enum class D8Variant {
  kAvoidCentre,   // x -> V1 \ {z}
  kAvoidMatched,  // x -> V1 \ {w}, w the matched predecessor of v
};

// A rooted arborescence of depth <= 2, described by the number of
// grandchildren below each child of the root. Order = 1 + size + sum.
// Shapes are compared and enumerated in non-increasing normal form.
using Arborescence = std::vector<int>;

int arborescence_order(const Arborescence& shape);

// All depth-<=2 arborescence shapes of the given order (>= 1), pairwise
// non-isomorphic, in a fixed order. The first entry is a single child
// carrying every other vertex as a grandchild.
std::vector<Arborescence> arborescence_shapes(int order);

// Free parameters of one family member. Only the fields relevant to
// `family` are meaningful; the rest stay at their defaults.
struct FamilyParams {
  FamilyId family = FamilyId::kD1;
  int n = 0;
  // Extra 2-cycles: inside V1 for D1, D4, D5, D10; inside V2 for D2, D6, D7
  // (c = v4_size / 2), D8 and D9 (forced by n).
  int c = 0;
  // |V4| for D2, D6, D7: the bottom vertices that sit on 2-cycles.
  int v4_size = 0;
  D8Variant variant = D8Variant::kAvoidCentre;
  // D5: orders of the two S components.
  int s1 = 0;
  int s2 = 0;
  // D4: arborescences hanging off the two roots of T.
  Arborescence left;
  Arborescence right;

  auto operator<=>(const FamilyParams&) const = default;
};

// e.g. "D4(n=14,c=1,left=[1],right=[0,0])".
std::string to_string(const FamilyParams& p);

// Throws DomainError describing the first violated constraint.
void validate(const FamilyParams& p);

// 2-cycle 0 <-> 1 plus an out-star from 1 to 2..order-1; order arcs.
// Throws DomainError for order < 2.
Digraph build_S(int order);

// 2-cycle 0 <-> 1 plus a depth-<=2 arborescence rooted at each of 0 and 1.
// Non-root vertices of the left tree come first, each child followed by its
// grandchildren.
Digraph build_T(const Arborescence& left, const Arborescence& right);
// Uses the first shape of each order from arborescence_shapes().
// Throws DomainError unless both orders are >= 1.
Digraph build_T(int left_order, int right_order);

// Closed-form maximum size of a P(2,2)-free digraph of order n >= 13:
// (n^2+4n-1)/4 for odd n, (n^2+4n)/4 when n/2 is even, (n^2+4n-4)/4 when n/2
// is odd. Throws DomainError below 13, where the formula is known to fail.
int ex_formula(int n);

// Builds the member described by `p` (validated first).
Digraph build_family(const FamilyParams& p);

// Every admissible parameter tuple for (family, n), in a fixed order;
// empty when the family does not exist at n.
std::vector<FamilyParams> enumerate_params(FamilyId family, int n);

// Order-5 digraph with 2-cycles 0<->1, 0<->2, 1<->2, 0<->3, 0<->4, 3<->4:
// P(2,2)-free with 12 arcs, one more than the closed form gives at n = 5.
Digraph remark_digraph();

}  // namespace p22

#endif  // P22_CONSTRUCTIONS_HPP_
