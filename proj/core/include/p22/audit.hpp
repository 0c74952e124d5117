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

// Structural facts about P(2,2)-free and extremal digraphs, as checks.
//
// Notation: for a vertex v, top(v) = N+(v) and bottom(v) = V \ N+(v) (which
// contains v). k is the maximum out-degree.
//
// Facts that hold for every P(2,2)-free digraph:
//   common_successors          two successors of v share no successor but v
//   out_neighborhood_indegree  each u != v has <= 1 predecessor in N+(v)
//   pigeonhole                 e(s1,S) + e(s2,S) >= |S|+2 for s1,s2 in N+(v)
//                              forces a P(2,2)
//   common_successor_bound     u outside N+(v) + v shares at most
//                              d+(v) - tau(v) + 1 successors with v
//   nonadjacent_outsets        for an arc u1 -> u2 inside bottom(v), no arc
//                              runs from N+(u1) & top(v) to N+(u2) & top(v)
//
// Facts that hold only for extremal digraphs with n >= 13, checked at every
// vertex of maximum out-degree:
//   alpha_tau                  alpha(v) <= 1 and tau(v) <= 2
//   max_outdegree_range        n/2 <= k <= n/2 + 2
//   outset_structure           if every top vertex has a predecessor in the
//                              top, then for an arc u1 -> u2 in bottom(v) with
//                              d+(u1) = d+(u2) = k both reach exactly
//                              top(v) minus one vertex u', and u' reaches
//                              the rest of top(v)
// On other inputs these are reported as not applicable.

#ifndef P22_AUDIT_HPP_
#define P22_AUDIT_HPP_

#include <string>
#include <vector>

#include "p22/digraph.hpp"

namespace p22 {

enum class AuditStatus { kHolds, kViolated, kNotApplicable };

std::string to_string(AuditStatus s);  // "holds" / "violated" / "n/a"

struct Verdict {
  AuditStatus status = AuditStatus::kHolds;
  // Vertices certifying a violation; layout documented per check.
  std::vector<Vertex> witness;

  bool holds() const { return status == AuditStatus::kHolds; }
};

// Violation witness: (v, s1, s2, w) with s1 < s2 in N+(v) and w != v a
// common successor. Holds exactly when the digraph is P(2,2)-free.
Verdict audit_common_successors(const Digraph& d);

// Violation witness: (v, u, p1, p2), p1 < p2 the predecessors of u in N+(v).
Verdict audit_out_neighborhood_indegree(const Digraph& d, Vertex v);

// Checks the implication "e(s1,S) + e(s2,S) >= |S| + 2 implies not free".
// Holds when the premise is false or the detector finds a P(2,2). Witness on
// violation: (v, s1, s2). Throws ContractError unless s1 != s2 are both in
// N+(v).
Verdict audit_pigeonhole_filter(const Digraph& d, Vertex v, Vertex s1,
                                Vertex s2, VertexSet s);

// Violation witness: (v, u).
Verdict audit_common_successor_bound(const Digraph& d, Vertex v);

// Violation witness: (v, u1, u2, a, b), a in N+(u1), b in N+(u2), a -> b.
Verdict audit_nonadjacent_outsets(const Digraph& d, Vertex v);

// Extremal-only check; witness (v, u1, u2) on violation.
Verdict audit_outset_structure(const Digraph& d, Vertex v);

struct VertexMeasure {
  Vertex v = 0;
  int out_degree = 0;
  int tau = 0;
  int alpha = 0;
};

struct AuditEntry {
  std::string check;
  // -1 for whole-digraph checks.
  Vertex vertex = -1;
  Verdict verdict;
};

struct AuditReport {
  int n = 0;
  int arcs = 0;
  int k = 0;
  bool free = false;
  // Free, n >= 13 and arcs equal to the closed-form maximum.
  bool extremal = false;
  std::vector<VertexMeasure> measures;
  std::vector<AuditEntry> entries;

  bool all_hold() const;  // no entry violated
  std::string to_text() const;
  // One "key=value" line per fact, stable ordering.
  std::string to_key_values() const;
};

// alpha_tau and max_outdegree_range on every max-out-degree vertex;
// report-only (not applicable) unless the digraph is extremal.
AuditReport audit_extremal_bounds(const Digraph& d);

// Everything: the whole-digraph checks plus every per-vertex check at each
// vertex in `vertices` (all max-out-degree vertices when empty).
AuditReport audit_all(const Digraph& d, VertexSet vertices = VertexSet());

}  // namespace p22

#endif  // P22_AUDIT_HPP_
