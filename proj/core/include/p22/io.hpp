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

// JSON interchange and DOT export.
//
// JSON layout (keys in this order, arcs sorted lexicographically):
//   {"n":5,"arcs":[[0,1],[0,2]],"meta":{"family":"D3","params":"...",
//    "provenance":"..."}}
// "meta" and each of its keys are optional.

#ifndef P22_IO_HPP_
#define P22_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "p22/digraph.hpp"

namespace p22 {

struct DigraphMetadata {
  std::optional<std::string> family;
  std::optional<std::string> params;
  std::optional<std::string> provenance;

  bool empty() const { return !family && !params && !provenance; }
  bool operator==(const DigraphMetadata&) const = default;
};

struct DigraphDocument {
  Digraph digraph{1};
  DigraphMetadata meta;

  bool operator==(const DigraphDocument&) const = default;
};

// Compact, deterministic; no trailing newline.
std::string encode_json(const Digraph& d);
std::string encode_json(const DigraphDocument& doc);

// Throws ParseError: byte position for malformed JSON, arc index for loops,
// duplicates and out-of-range endpoints. A bad order or a missing field is
// reported at position 0.
Digraph decode_json(std::string_view text);
DigraphDocument decode_document(std::string_view text);

// "digraph D {", one "  vA -> vB;" line per arc in lexicographic order, "}".
// Isolated vertices are not listed.
std::string encode_dot(const Digraph& d);

}  // namespace p22

#endif  // P22_IO_HPP_
