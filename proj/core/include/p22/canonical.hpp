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

// Exact canonical labelling of small digraphs.
//
// The search is the usual individualize-and-refine scheme: vertices start
// coloured by (out-degree, in-degree, number of 2-cycles), colours are refined
// to an equitable ordered partition, and non-discrete partitions branch on the
// first smallest non-singleton cell. Each discrete leaf yields a relabelled
// adjacency matrix; the canonical form is the lexicographically smallest one.
// Leaves that reproduce an earlier matrix reveal automorphisms, which are used
// to skip equivalent subtrees.

#ifndef P22_CANONICAL_HPP_
#define P22_CANONICAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "p22/digraph.hpp"

namespace p22 {

class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(int order, std::vector<std::uint64_t> rows)
      : order_(order), rows_(std::move(rows)) {}

  int order() const { return order_; }
  // Row i, bit j set iff canonical vertex i -> canonical vertex j.
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  // Lowercase hex: two digits of order, then ceil(order/4) digits per row.
  std::string to_hex() const;

  // The digraph whose labelling is the canonical one.
  Digraph to_digraph() const;

  auto operator<=>(const CanonicalForm&) const = default;

 private:
  int order_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // label[v] is the canonical position of vertex v.
  std::vector<Vertex> label;
  // Leaves visited by the search; a rough cost measure.
  long leaves = 0;
};

CanonicalLabeling canonical_labeling(const Digraph& d);

CanonicalForm canonical_form(const Digraph& d);

// Equal orders and equal canonical forms; cheap invariants are compared first.
bool are_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace p22

#endif  // P22_CANONICAL_HPP_
