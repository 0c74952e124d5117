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

#include "p22/io.hpp"

#include <sstream>

#include "json.hpp"
#include "p22/error.hpp"

namespace p22 {
namespace {

using Json = nlohmann::ordered_json;

Json ArcsToJson(const Digraph& d) {
  Json arcs = Json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  return arcs;
}

std::optional<std::string> OptionalString(const Json& meta, const char* key) {
  const auto it = meta.find(key);
  if (it == meta.end()) return std::nullopt;
  if (!it->is_string()) {
    throw ParseError(std::string("meta.") + key + " must be a string", 0);
  }
  return it->get<std::string>();
}

bool IsIndex(const Json& value) {
  return value.is_number_integer() || value.is_number_unsigned();
}

}  // namespace

std::string encode_json(const Digraph& d) {
  return encode_json(DigraphDocument{d, {}});
}

std::string encode_json(const DigraphDocument& doc) {
  Json j;
  j["n"] = doc.digraph.order();
  j["arcs"] = ArcsToJson(doc.digraph);
  if (!doc.meta.empty()) {
    Json meta = Json::object();
    if (doc.meta.family) meta["family"] = *doc.meta.family;
    if (doc.meta.params) meta["params"] = *doc.meta.params;
    if (doc.meta.provenance) meta["provenance"] = *doc.meta.provenance;
    j["meta"] = std::move(meta);
  }
  return j.dump();
}

DigraphDocument decode_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON", e.byte);
  }
  if (!j.is_object()) throw ParseError("document must be an object", 0);
  const auto n_it = j.find("n");
  if (n_it == j.end() || !IsIndex(*n_it)) {
    throw ParseError("missing integer field \"n\"", 0);
  }
  const auto n = n_it->get<std::int64_t>();
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("order " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxVertices),
                     0);
  }
  const auto arcs_it = j.find("arcs");
  if (arcs_it == j.end() || !arcs_it->is_array()) {
    throw ParseError("missing array field \"arcs\"", 0);
  }

  DigraphDocument doc{Digraph(static_cast<int>(n)), {}};
  std::size_t index = 0;
  for (const Json& arc : *arcs_it) {
    if (!arc.is_array() || arc.size() != 2 || !IsIndex(arc[0]) ||
        !IsIndex(arc[1])) {
      throw ParseError("arc must be a pair of integers", index);
    }
    const auto u = arc[0].get<std::int64_t>();
    const auto v = arc[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("arc endpoint out of range", index);
    }
    if (u == v) throw ParseError("loop arc", index);
    if (doc.digraph.has_arc(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError("duplicate arc", index);
    }
    doc.digraph.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++index;
  }

  if (const auto meta_it = j.find("meta"); meta_it != j.end()) {
    if (!meta_it->is_object()) throw ParseError("meta must be an object", 0);
    doc.meta.family = OptionalString(*meta_it, "family");
    doc.meta.params = OptionalString(*meta_it, "params");
    doc.meta.provenance = OptionalString(*meta_it, "provenance");
  }
  return doc;
}

Digraph decode_json(std::string_view text) {
  return decode_document(text).digraph;
}

std::string encode_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (const auto& [u, v] : d.arcs()) {
    os << "  v" << u << " -> v" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace p22
