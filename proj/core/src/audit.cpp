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

#include "p22/audit.hpp"

#include <algorithm>
#include <sstream>

#include "p22/constructions.hpp"
#include "p22/detect.hpp"
#include "p22/error.hpp"

namespace p22 {
namespace {

Verdict Holds() { return {}; }

Verdict NotApplicable() { return {AuditStatus::kNotApplicable, {}}; }

Verdict Violated(std::vector<Vertex> witness) {
  return {AuditStatus::kViolated, std::move(witness)};
}

void RequireVertex(const Digraph& d, Vertex v) {
  if (v < 0 || v >= d.order()) {
    throw RangeError("vertex " + std::to_string(v) + " outside 0.." +
                     std::to_string(d.order() - 1));
  }
}

bool IsExtremal(const Digraph& d) {
  return d.order() >= 13 && d.arc_count() == ex_formula(d.order()) &&
         is_free(d);
}

std::string WitnessText(const std::vector<Vertex>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::kHolds:
      return "holds";
    case AuditStatus::kViolated:
      return "violated";
    case AuditStatus::kNotApplicable:
      return "n/a";
  }
  return "unknown";
}

Verdict audit_common_successors(const Digraph& d) {
  for (Vertex v : d.vertices()) {
    const VertexSet succ = d.out_neighbors(v);
    for (Vertex s1 : succ) {
      for (Vertex s2 : succ) {
        if (s2 <= s1) continue;
        VertexSet common = d.out_neighbors(s1) & d.out_neighbors(s2);
        common.erase(v);
        if (!common.empty()) return Violated({v, s1, s2, common.min()});
      }
    }
  }
  return Holds();
}

Verdict audit_out_neighborhood_indegree(const Digraph& d, Vertex v) {
  RequireVertex(d, v);
  const VertexSet top = d.out_neighbors(v);
  for (Vertex u : d.vertices()) {
    if (u == v) continue;
    const VertexSet preds = d.in_neighbors(u) & top;
    if (preds.size() >= 2) {
      const auto list = preds.to_vector();
      return Violated({v, u, list[0], list[1]});
    }
  }
  return Holds();
}

Verdict audit_pigeonhole_filter(const Digraph& d, Vertex v, Vertex s1,
                                Vertex s2, VertexSet s) {
  RequireVertex(d, v);
  RequireVertex(d, s1);
  RequireVertex(d, s2);
  if (s1 == s2 || !d.has_arc(v, s1) || !d.has_arc(v, s2)) {
    throw ContractError("s1 and s2 must be distinct successors of v");
  }
  if ((s - VertexSet::All(d.order())).size() > 0) {
    throw RangeError("set contains vertices outside the digraph");
  }
  const int lhs = static_cast<int>((d.out_neighbors(s1) & s).size() +
                                   (d.out_neighbors(s2) & s).size());
  if (lhs < static_cast<int>(s.size()) + 2) return Holds();
  if (!is_free(d)) return Holds();
  return Violated({v, s1, s2});
}

Verdict audit_common_successor_bound(const Digraph& d, Vertex v) {
  RequireVertex(d, v);
  const VertexSet top = d.out_neighbors(v);
  const int bound = d.out_degree(v) - tau(d, v) + 1;
  for (Vertex u : d.vertices()) {
    if (u == v || top.contains(u)) continue;
    if (static_cast<int>((d.out_neighbors(u) & top).size()) > bound) {
      return Violated({v, u});
    }
  }
  return Holds();
}

Verdict audit_nonadjacent_outsets(const Digraph& d, Vertex v) {
  RequireVertex(d, v);
  const VertexSet top = d.out_neighbors(v);
  const VertexSet bottom = VertexSet::All(d.order()) - top;
  for (Vertex u1 : bottom) {
    const VertexSet from = d.out_neighbors(u1) & top;
    for (Vertex u2 : d.out_neighbors(u1) & bottom) {
      const VertexSet to = d.out_neighbors(u2) & top;
      for (Vertex a : from) {
        const VertexSet hit = d.out_neighbors(a) & to;
        if (!hit.empty()) return Violated({v, u1, u2, a, hit.min()});
      }
    }
  }
  return Holds();
}

Verdict audit_outset_structure(const Digraph& d, Vertex v) {
  RequireVertex(d, v);
  const int k = max_out_degree(d);
  if (!IsExtremal(d) || d.out_degree(v) != k) return NotApplicable();
  const VertexSet top = d.out_neighbors(v);
  for (Vertex t : top) {
    // Hypothesis: every top vertex has a predecessor in the top.
    if ((d.in_neighbors(t) & top).empty()) return Holds();
  }
  const VertexSet bottom = VertexSet::All(d.order()) - top;
  for (Vertex u1 : bottom) {
    if (d.out_degree(u1) != k) continue;
    const VertexSet reach1 = d.out_neighbors(u1) & top;
    for (Vertex u2 : d.out_neighbors(u1) & bottom) {
      if (d.out_degree(u2) != k) continue;
      const VertexSet reach2 = d.out_neighbors(u2) & top;
      const VertexSet missing = top - reach1;
      bool ok = reach1 == reach2 && missing.size() == 1;
      if (ok) {
        const Vertex u = missing.min();
        VertexSet rest = top;
        rest.erase(u);
        ok = (d.out_neighbors(u) & rest) == rest;
      }
      if (!ok) return Violated({v, u1, u2});
    }
  }
  return Holds();
}

bool AuditReport::all_hold() const {
  return std::none_of(entries.begin(), entries.end(), [](const AuditEntry& e) {
    return e.verdict.status == AuditStatus::kViolated;
  });
}

std::string AuditReport::to_text() const {
  std::ostringstream os;
  os << "n=" << n << " arcs=" << arcs << " k=" << k
     << (free ? " free" : " not-free")
     << (extremal ? " extremal" : "") << '\n';
  for (const VertexMeasure& m : measures) {
    os << "  vertex " << m.v << ": out_degree=" << m.out_degree
       << " tau=" << m.tau << " alpha=" << m.alpha << '\n';
  }
  for (const AuditEntry& e : entries) {
    os << "  " << e.check;
    if (e.vertex >= 0) os << " @" << e.vertex;
    os << ": " << to_string(e.verdict.status);
    if (!e.verdict.witness.empty()) {
      os << " [" << WitnessText(e.verdict.witness) << ']';
    }
    os << '\n';
  }
  return os.str();
}

std::string AuditReport::to_key_values() const {
  std::ostringstream os;
  os << "n=" << n << '\n'
     << "arcs=" << arcs << '\n'
     << "k=" << k << '\n'
     << "free=" << (free ? "true" : "false") << '\n'
     << "extremal=" << (extremal ? "true" : "false") << '\n';
  for (const VertexMeasure& m : measures) {
    const std::string prefix = "vertex." + std::to_string(m.v) + '.';
    os << prefix << "out_degree=" << m.out_degree << '\n'
       << prefix << "tau=" << m.tau << '\n'
       << prefix << "alpha=" << m.alpha << '\n';
  }
  for (const AuditEntry& e : entries) {
    std::string key = "check." + e.check;
    if (e.vertex >= 0) key += '.' + std::to_string(e.vertex);
    os << key << '=' << to_string(e.verdict.status) << '\n';
    if (!e.verdict.witness.empty()) {
      os << key << ".witness=" << WitnessText(e.verdict.witness) << '\n';
    }
  }
  os << "all_hold=" << (all_hold() ? "true" : "false") << '\n';
  return os.str();
}

namespace {

AuditReport ReportHeader(const Digraph& d, VertexSet vertices) {
  AuditReport report;
  report.n = d.order();
  report.arcs = d.arc_count();
  report.k = max_out_degree(d);
  report.free = is_free(d);
  report.extremal = report.free && d.order() >= 13 &&
                    report.arcs == ex_formula(d.order());
  for (Vertex v : vertices) {
    report.measures.push_back({v, d.out_degree(v), tau(d, v), alpha(d, v)});
  }
  return report;
}

void AppendExtremalBounds(const Digraph& d, AuditReport& report) {
  for (const VertexMeasure& m : report.measures) {
    if (m.out_degree != report.k) continue;
    Verdict verdict = NotApplicable();
    if (report.extremal) {
      verdict = (m.alpha <= 1 && m.tau <= 2) ? Holds() : Violated({m.v});
    }
    report.entries.push_back({"alpha_tau", m.v, verdict});
  }
  Verdict range = NotApplicable();
  if (report.extremal) {
    const int n = d.order();
    const int k = report.k;
    range = (2 * k >= n && 2 * k <= n + 4) ? Holds() : Violated({});
  }
  report.entries.push_back({"max_outdegree_range", -1, range});
}

}  // namespace

AuditReport audit_extremal_bounds(const Digraph& d) {
  AuditReport report = ReportHeader(d, max_out_degree_vertices(d));
  AppendExtremalBounds(d, report);
  return report;
}

AuditReport audit_all(const Digraph& d, VertexSet vertices) {
  if (vertices.empty()) vertices = max_out_degree_vertices(d);
  for (Vertex v : vertices) RequireVertex(d, v);
  AuditReport report = ReportHeader(d, vertices);
  report.entries.push_back(
      {"common_successors", -1, audit_common_successors(d)});
  for (Vertex v : vertices) {
    report.entries.push_back({"out_neighborhood_indegree", v,
                              audit_out_neighborhood_indegree(d, v)});
    report.entries.push_back(
        {"common_successor_bound", v, audit_common_successor_bound(d, v)});
    report.entries.push_back(
        {"nonadjacent_outsets", v, audit_nonadjacent_outsets(d, v)});
    report.entries.push_back(
        {"outset_structure", v, audit_outset_structure(d, v)});
  }
  AppendExtremalBounds(d, report);
  return report;
}

}  // namespace p22
