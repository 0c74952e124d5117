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

// Membership in EX(n), the set of P(2,2)-free digraphs of order n >= 13 with
// the maximum number of arcs. A digraph is a member iff it, or its reverse, is
// isomorphic to one of the D1..D10 family members admissible at n. Matching
// is a canonical-form lookup against every enumerated family member.

#ifndef P22_RECOGNIZER_HPP_
#define P22_RECOGNIZER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "p22/constructions.hpp"
#include "p22/digraph.hpp"

namespace p22 {

enum class Orientation { kAsIs, kReversed };

enum class RejectReason { kWrongArcCount, kContainsP22, kNoFamilyMatch };

std::string to_string(Orientation o);    // "as-is" / "reversed"
std::string to_string(RejectReason r);   // "wrong arc count", ...

struct FamilyMatch {
  FamilyId family = FamilyId::kD1;
  Orientation orientation = Orientation::kAsIs;
  // The enumerated member that matched.
  FamilyParams params;
};

class Classification {
 public:
  static Classification Member(FamilyMatch match) {
    Classification c;
    c.match_ = std::move(match);
    return c;
  }
  static Classification NotExtremal(RejectReason reason) {
    Classification c;
    c.reason_ = reason;
    return c;
  }

  bool is_member() const { return match_.has_value(); }
  // Precondition: is_member().
  const FamilyMatch& match() const { return *match_; }
  // Precondition: !is_member().
  RejectReason reason() const { return reason_; }

  // "Member(D3, as-is)" or "NotExtremal(wrong arc count)".
  std::string to_string() const;

 private:
  std::optional<FamilyMatch> match_;
  RejectReason reason_ = RejectReason::kNoFamilyMatch;
};

// Gates, in order: arc count equals ex_formula(n); P(2,2)-free; canonical
// match. For a match, families are tried D1..D10 and, within a family, the
// digraph as given before its reverse. Throws DomainError for n < 13.
Classification classify(const Digraph& d);

bool is_in_ex(const Digraph& d);

// Every (family, orientation) pair that matches, with the first matching
// parameter tuple of each. Empty when a gate fails.
std::vector<FamilyMatch> all_matches(const Digraph& d);

struct TemplateStats {
  int templates = 0;           // enumerated parameter tuples over all families
  int distinct_templates = 0;  // isomorphism classes among them
  int ex_classes = 0;          // classes of templates and their reverses
};

// Counts derived from the template table at order n (n >= 13).
TemplateStats template_stats(int n);

}  // namespace p22

#endif  // P22_RECOGNIZER_HPP_
