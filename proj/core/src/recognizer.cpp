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

#include "p22/recognizer.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "p22/canonical.hpp"
#include "p22/detect.hpp"
#include "p22/error.hpp"

namespace p22 {
namespace {

struct TemplateTable {
  std::vector<FamilyParams> params;
  // Canonical form -> template indices, in enumeration (= family) order.
  std::map<CanonicalForm, std::vector<std::size_t>> by_form;
};

std::shared_ptr<const TemplateTable> BuildTable(int n) {
  auto table = std::make_shared<TemplateTable>();
  for (FamilyId family : kAllFamilies) {
    for (FamilyParams& p : enumerate_params(family, n)) {
      const CanonicalForm form = canonical_form(build_family(p));
      table->by_form[form].push_back(table->params.size());
      table->params.push_back(std::move(p));
    }
  }
  return table;
}

// Built once per order, then shared read-only.
std::shared_ptr<const TemplateTable> TableFor(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const TemplateTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = BuildTable(n);
  return slot;
}

void RequireDomain(const Digraph& d) {
  if (d.order() < 13) {
    throw DomainError("extremal classification needs n >= 13 (got " +
                      std::to_string(d.order()) + ")");
  }
}

std::optional<RejectReason> FailedGate(const Digraph& d) {
  if (d.arc_count() != ex_formula(d.order())) {
    return RejectReason::kWrongArcCount;
  }
  if (!is_free(d)) return RejectReason::kContainsP22;
  return std::nullopt;
}

std::vector<FamilyMatch> Matches(const Digraph& d, bool first_only) {
  const auto table = TableFor(d.order());
  const CanonicalForm forms[] = {canonical_form(d), canonical_form(reverse(d))};
  const Orientation orientations[] = {Orientation::kAsIs,
                                      Orientation::kReversed};
  std::vector<FamilyMatch> found;
  for (FamilyId family : kAllFamilies) {
    for (int o = 0; o < 2; ++o) {
      const auto it = table->by_form.find(forms[o]);
      if (it == table->by_form.end()) continue;
      for (std::size_t index : it->second) {
        const FamilyParams& p = table->params[index];
        if (p.family != family) continue;
        found.push_back({family, orientations[o], p});
        if (first_only) return found;
        break;
      }
    }
  }
  return found;
}

}  // namespace

std::string to_string(Orientation o) {
  return o == Orientation::kAsIs ? "as-is" : "reversed";
}

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::kWrongArcCount:
      return "wrong arc count";
    case RejectReason::kContainsP22:
      return "contains P22";
    case RejectReason::kNoFamilyMatch:
      return "no family match";
  }
  return "unknown";
}

std::string Classification::to_string() const {
  if (match_) {
    return "Member(" + p22::to_string(match_->family) + ", " +
           p22::to_string(match_->orientation) + ")";
  }
  return "NotExtremal(" + p22::to_string(reason_) + ")";
}

Classification classify(const Digraph& d) {
  RequireDomain(d);
  if (auto reason = FailedGate(d)) return Classification::NotExtremal(*reason);
  auto found = Matches(d, /*first_only=*/true);
  if (found.empty()) {
    return Classification::NotExtremal(RejectReason::kNoFamilyMatch);
  }
  return Classification::Member(std::move(found.front()));
}

bool is_in_ex(const Digraph& d) { return classify(d).is_member(); }

std::vector<FamilyMatch> all_matches(const Digraph& d) {
  RequireDomain(d);
  if (FailedGate(d)) return {};
  return Matches(d, /*first_only=*/false);
}

TemplateStats template_stats(int n) {
  if (n < 13) throw DomainError("template table needs n >= 13");
  const auto table = TableFor(n);
  TemplateStats stats;
  stats.templates = static_cast<int>(table->params.size());
  stats.distinct_templates = static_cast<int>(table->by_form.size());
  std::set<CanonicalForm> classes;
  for (const auto& [form, indices] : table->by_form) {
    classes.insert(form);
    classes.insert(canonical_form(reverse(form.to_digraph())));
  }
  stats.ex_classes = static_cast<int>(classes.size());
  return stats;
}

}  // namespace p22
