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

#include "p22/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "p22/error.hpp"

namespace p22 {
namespace {

int TopSize(int n) { return n / 2 + 1; }

void Require(bool ok, const FamilyParams& p, const std::string& what) {
  if (!ok) throw DomainError(to_string(p) + ": " + what);
}

bool IsNormalShape(const Arborescence& shape) {
  return std::all_of(shape.begin(), shape.end(), [](int g) { return g >= 0; }) &&
         std::is_sorted(shape.begin(), shape.end(), std::greater<>());
}

std::string ShapeString(const Arborescence& shape) {
  std::string s = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(shape[i]);
  }
  return s + "]";
}

// Partitions of `total` into parts no larger than `max_part`, parts
// non-increasing, emitted largest-first.
void Partitions(int total, int max_part, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    prefix.push_back(part);
    Partitions(total - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Mutable scratch digraph for one family member. V1 = [0, top), V2 after.
class Layout {
 public:
  explicit Layout(int n) : d_(n), top_(TopSize(n)) {}

  int top() const { return top_; }
  int bottom() const { return d_.order() - top_; }
  Vertex b(int j) const { return top_ + j; }
  VertexSet top_set() const { return VertexSet::Range(0, top_); }

  void arc(Vertex u, Vertex v) { d_.add_arc(u, v); }
  void two_cycle(Vertex u, Vertex v) {
    d_.add_arc(u, v);
    d_.add_arc(v, u);
  }
  // S component with non-centre `y`, centre `z`, and the given leaves.
  void s_component(Vertex y, Vertex z, Vertex first_leaf, int leaves) {
    two_cycle(y, z);
    for (int i = 0; i < leaves; ++i) arc(z, first_leaf + i);
  }
  // Consecutive 2-cycles (first, first+1), (first+2, first+3), ...
  void two_cycles(Vertex first, int count) {
    for (int i = 0; i < count; ++i) two_cycle(first + 2 * i, first + 2 * i + 1);
  }
  // i-th listed top vertex -> b(i).
  void match(const std::vector<Vertex>& tops) {
    for (std::size_t i = 0; i < tops.size(); ++i) {
      arc(tops[i], b(static_cast<int>(i)));
    }
  }
  void broadcast(Vertex u, VertexSet targets) {
    for (Vertex t : targets) arc(u, t);
  }
  // Top vertices in increasing order, minus `skip`.
  std::vector<Vertex> tops_except(VertexSet skip) const {
    return (top_set() - skip).to_vector();
  }

  Digraph take() && { return std::move(d_); }

 private:
  Digraph d_;
  int top_;
};

constexpr Vertex kY = 0;
constexpr Vertex kZ = 1;

Digraph BuildD1Like(const FamilyParams& p, bool skip_w) {
  Layout g(p.n);
  const int s_order = g.top() - 2 * p.c;
  g.s_component(kY, kZ, 2, s_order - 2);
  g.two_cycles(s_order, p.c);
  // D10 leaves out w = 2 as well as y.
  g.match(g.tops_except(skip_w ? VertexSet{kY, 2} : VertexSet{kY}));
  for (int j = 0; j < g.bottom(); ++j) g.broadcast(g.b(j), g.top_set());
  return std::move(g).take();
}

// D2, D6, D7: V3 = first v3 bottom vertices, V4 the rest on 2-cycles.
Digraph BuildSplitBottom(const FamilyParams& p) {
  Layout g(p.n);
  g.s_component(kY, kZ, 2, g.top() - 2);
  const int v3 = g.bottom() - p.v4_size;
  g.two_cycles(g.b(v3), p.v4_size / 2);
  switch (p.family) {
    case FamilyId::kD2:
      g.match(g.tops_except({kY}));
      break;
    case FamilyId::kD6:
      g.match(g.tops_except({kY, kZ}));
      break;
    default:  // D7: x = 2 is unmatched, z -> b(0) lands in V3.
      g.match(g.tops_except({kY, 2}));
      break;
  }
  for (int j = 0; j < g.bottom(); ++j) {
    g.broadcast(g.b(j), j < v3 ? g.top_set() : g.top_set() - VertexSet{kZ});
  }
  return std::move(g).take();
}

// D3, D8, D9: v = b(0) receives from both z and its matched vertex 2.
Digraph BuildDoubleV(const FamilyParams& p) {
  Layout g(p.n);
  g.s_component(kY, kZ, 2, g.top() - 2);
  const Vertex v = g.b(0);
  g.arc(kZ, v);
  g.match(g.tops_except({kY, kZ}));
  g.broadcast(v, g.top_set());
  const VertexSet no_z = g.top_set() - VertexSet{kZ};

  int first_plain = 1;
  if (p.family == FamilyId::kD8) {
    const Vertex x = g.b(1);
    const Vertex avoided = p.variant == D8Variant::kAvoidCentre ? kZ : 2;
    g.broadcast(x, g.top_set() - VertexSet{avoided});
    first_plain = 2;
  } else if (p.family == FamilyId::kD9) {
    const Vertex x = g.b(1);
    const Vertex x1 = g.b(2);
    const Vertex x2 = g.b(3);
    const Vertex x2_pred = 2 + 3;  // matched to b(3)
    g.arc(x, x1);
    g.two_cycle(x1, x2);
    g.broadcast(x, g.top_set() - VertexSet{kZ, x2_pred});
    g.broadcast(x1, no_z);
    g.broadcast(x2, no_z);
    first_plain = 4;
  }
  const int plain = g.bottom() - first_plain;
  g.two_cycles(g.b(first_plain), plain / 2);
  for (int j = first_plain; j < g.bottom(); ++j) g.broadcast(g.b(j), no_z);
  return std::move(g).take();
}

Digraph BuildD4(const FamilyParams& p) {
  Layout g(p.n);
  const Digraph t = build_T(p.left, p.right);
  for (const auto& [u, v] : t.arcs()) g.arc(u, v);
  g.two_cycles(t.order(), p.c);
  g.match(g.tops_except({0, 1}));
  for (int j = 0; j < g.bottom(); ++j) g.broadcast(g.b(j), g.top_set());
  return std::move(g).take();
}

Digraph BuildD5(const FamilyParams& p) {
  Layout g(p.n);
  // y1 = 0, y2 = 1, z1 = 2, z2 = 3, then the leaves of z1 and of z2.
  g.s_component(0, 2, 4, p.s1 - 2);
  g.s_component(1, 3, 4 + (p.s1 - 2), p.s2 - 2);
  g.two_cycles(p.s1 + p.s2, p.c);
  g.match(g.tops_except({0, 1}));
  for (int j = 0; j < g.bottom(); ++j) g.broadcast(g.b(j), g.top_set());
  return std::move(g).take();
}

}  // namespace

std::string to_string(FamilyId family) {
  return "D" + std::to_string(static_cast<int>(family));
}

std::optional<FamilyId> parse_family(std::string_view text) {
  if (!text.empty() && (text.front() == 'D' || text.front() == 'd')) {
    text.remove_prefix(1);
  }
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 ||
      value > 10) {
    return std::nullopt;
  }
  return static_cast<FamilyId>(value);
}

bool family_admits_order(FamilyId family, int n) {
  if (n < 1) return false;
  switch (family) {
    case FamilyId::kD1:
    case FamilyId::kD2:
      return n % 2 == 1;
    case FamilyId::kD3:
      return n % 4 == 0;
    default:
      return n % 2 == 0 && (n / 2) % 2 == 1;
  }
}

int arborescence_order(const Arborescence& shape) {
  return 1 + static_cast<int>(shape.size()) +
         std::accumulate(shape.begin(), shape.end(), 0);
}

std::vector<Arborescence> arborescence_shapes(int order) {
  if (order < 1) throw DomainError("arborescence order must be >= 1");
  std::vector<std::vector<int>> parts;
  std::vector<int> prefix;
  Partitions(order - 1, order - 1, prefix, parts);
  std::vector<Arborescence> shapes;
  shapes.reserve(parts.size());
  for (auto& part : parts) {
    for (int& x : part) x -= 1;  // child itself is not a grandchild
    shapes.push_back(std::move(part));
  }
  return shapes;
}

std::string to_string(const FamilyParams& p) {
  std::ostringstream os;
  os << to_string(p.family) << "(n=" << p.n;
  switch (p.family) {
    case FamilyId::kD1:
    case FamilyId::kD10:
      os << ",c=" << p.c;
      break;
    case FamilyId::kD2:
    case FamilyId::kD6:
    case FamilyId::kD7:
      os << ",v4=" << p.v4_size;
      break;
    case FamilyId::kD4:
      os << ",c=" << p.c << ",left=" << ShapeString(p.left)
         << ",right=" << ShapeString(p.right);
      break;
    case FamilyId::kD5:
      os << ",c=" << p.c << ",s1=" << p.s1 << ",s2=" << p.s2;
      break;
    case FamilyId::kD8:
      os << ",variant="
         << (p.variant == D8Variant::kAvoidCentre ? 'a' : 'b');
      break;
    case FamilyId::kD3:
    case FamilyId::kD9:
      break;
  }
  os << ")";
  return os.str();
}

void validate(const FamilyParams& p) {
  Require(p.n >= 1 && p.n <= kMaxVertices, p, "order outside 1..64");
  Require(family_admits_order(p.family, p.n), p,
          "family does not exist at this order (parity)");
  const int m1 = TopSize(p.n);
  const int m2 = p.n - m1;
  switch (p.family) {
    case FamilyId::kD1:
    case FamilyId::kD10:
      Require(p.c >= 0 && 2 * p.c <= m1 - 2, p, "need 0 <= 2c <= |V1| - 2");
      Require(p.family != FamilyId::kD10 || m1 >= 3, p,
              "D10 needs a vertex outside {y, z}");
      break;
    case FamilyId::kD2:
      Require(p.v4_size >= 2 && p.v4_size % 2 == 0, p,
              "|V4| must be even and >= 2");
      Require(m2 - p.v4_size >= 1, p, "|V3| must be >= 1");
      Require(p.c == p.v4_size / 2, p, "c must equal |V4| / 2");
      Require(m1 >= 2, p, "order too small");
      break;
    case FamilyId::kD3:
      Require(m1 >= 3, p, "order too small");
      Require(p.c == p.n / 4 - 1, p, "c is forced to n/4 - 1");
      break;
    case FamilyId::kD4: {
      Require(IsNormalShape(p.left) && IsNormalShape(p.right), p,
              "arborescence shapes must be non-increasing and >= 0");
      const int t = arborescence_order(p.left) + arborescence_order(p.right);
      Require(t <= m1 && (m1 - t) % 2 == 0, p,
              "T must fill V1 up to an even remainder");
      Require(p.c == (m1 - t) / 2, p, "c must equal (|V1| - |T|) / 2");
      break;
    }
    case FamilyId::kD5:
      Require(p.s1 >= 2 && p.s2 >= 2, p, "S components need order >= 2");
      Require(p.s1 + p.s2 <= m1 && (m1 - p.s1 - p.s2) % 2 == 0, p,
              "S components must fill V1 up to an even remainder");
      Require(p.c == (m1 - p.s1 - p.s2) / 2, p,
              "c must equal (|V1| - s1 - s2) / 2");
      break;
    case FamilyId::kD6:
    case FamilyId::kD7:
      Require(p.v4_size >= 0 && p.v4_size % 2 == 0 && p.v4_size <= m2, p,
              "|V4| must be even and at most |V2|");
      Require(p.family != FamilyId::kD7 || m2 - p.v4_size >= 1, p,
              "D7 needs |V3| >= 1");
      Require(p.c == p.v4_size / 2, p, "c must equal |V4| / 2");
      Require(m1 >= 3, p, "order too small");
      break;
    case FamilyId::kD8:
      Require(m2 >= 2 && (m2 - 2) % 2 == 0, p, "|V2| - 2 must be even");
      Require(p.c == (m2 - 2) / 2, p, "c is forced to (|V2| - 2) / 2");
      Require(m1 >= 4, p, "order too small");
      break;
    case FamilyId::kD9:
      Require(m2 >= 4 && (m2 - 4) % 2 == 0, p, "|V2| - 4 must be even");
      Require(p.c == (m2 - 4) / 2, p, "c is forced to (|V2| - 4) / 2");
      Require(m1 >= 6, p, "order too small");
      break;
  }
}

Digraph build_S(int order) {
  if (order < 2) throw DomainError("S needs order >= 2");
  Digraph d(order);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  for (Vertex j = 2; j < order; ++j) d.add_arc(1, j);
  return d;
}

Digraph build_T(const Arborescence& left, const Arborescence& right) {
  if (!IsNormalShape(left) || !IsNormalShape(right)) {
    throw DomainError("arborescence shapes must be non-increasing and >= 0");
  }
  const int order = arborescence_order(left) + arborescence_order(right);
  Digraph d(order);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  Vertex next = 2;
  for (Vertex root : {0, 1}) {
    for (int grandchildren : root == 0 ? left : right) {
      const Vertex child = next++;
      d.add_arc(root, child);
      for (int i = 0; i < grandchildren; ++i) d.add_arc(child, next++);
    }
  }
  return d;
}

Digraph build_T(int left_order, int right_order) {
  if (left_order < 1 || right_order < 1) {
    throw DomainError("T needs both arborescence orders >= 1");
  }
  return build_T(arborescence_shapes(left_order).front(),
                 arborescence_shapes(right_order).front());
}

int ex_formula(int n) {
  if (n < 13) {
    throw DomainError("closed form holds only for n >= 13 (got " +
                      std::to_string(n) + ")");
  }
  const int base = n * n + 4 * n;
  if (n % 2 == 1) return (base - 1) / 4;
  if ((n / 2) % 2 == 0) return base / 4;
  return (base - 4) / 4;
}

Digraph build_family(const FamilyParams& p) {
  validate(p);
  switch (p.family) {
    case FamilyId::kD1:
      return BuildD1Like(p, /*skip_w=*/false);
    case FamilyId::kD10:
      return BuildD1Like(p, /*skip_w=*/true);
    case FamilyId::kD2:
    case FamilyId::kD6:
    case FamilyId::kD7:
      return BuildSplitBottom(p);
    case FamilyId::kD3:
    case FamilyId::kD8:
    case FamilyId::kD9:
      return BuildDoubleV(p);
    case FamilyId::kD4:
      return BuildD4(p);
    case FamilyId::kD5:
      return BuildD5(p);
  }
  throw DomainError("unknown family");
}

std::vector<FamilyParams> enumerate_params(FamilyId family, int n) {
  std::vector<FamilyParams> out;
  if (!family_admits_order(family, n) || n > kMaxVertices) return out;
  const int m1 = TopSize(n);
  const int m2 = n - m1;
  FamilyParams base;
  base.family = family;
  base.n = n;
  auto keep_if_valid = [&out](FamilyParams p) {
    try {
      validate(p);
      out.push_back(std::move(p));
    } catch (const DomainError&) {
    }
  };
  switch (family) {
    case FamilyId::kD1:
    case FamilyId::kD10:
      for (int c = 0; 2 * c <= m1 - 2; ++c) {
        FamilyParams p = base;
        p.c = c;
        keep_if_valid(p);
      }
      break;
    case FamilyId::kD2:
    case FamilyId::kD6:
    case FamilyId::kD7:
      for (int v4 = 0; v4 <= m2; v4 += 2) {
        FamilyParams p = base;
        p.v4_size = v4;
        p.c = v4 / 2;
        keep_if_valid(p);
      }
      break;
    case FamilyId::kD3: {
      FamilyParams p = base;
      p.c = n / 4 - 1;
      keep_if_valid(p);
      break;
    }
    case FamilyId::kD4:
      // T(y1, y2) is symmetric in its roots: keep left <= right.
      for (int lo = 1; lo < m1; ++lo) {
        for (int ro = lo; lo + ro <= m1; ++ro) {
          if ((m1 - lo - ro) % 2 != 0) continue;
          const auto left_shapes = arborescence_shapes(lo);
          const auto right_shapes = arborescence_shapes(ro);
          for (std::size_t i = 0; i < left_shapes.size(); ++i) {
            for (std::size_t j = lo == ro ? i : 0; j < right_shapes.size();
                 ++j) {
              FamilyParams p = base;
              p.left = left_shapes[i];
              p.right = right_shapes[j];
              p.c = (m1 - lo - ro) / 2;
              keep_if_valid(p);
            }
          }
        }
      }
      break;
    case FamilyId::kD5:
      for (int s1 = 2; s1 <= m1; ++s1) {
        for (int s2 = s1; s1 + s2 <= m1; ++s2) {
          if ((m1 - s1 - s2) % 2 != 0) continue;
          FamilyParams p = base;
          p.s1 = s1;
          p.s2 = s2;
          p.c = (m1 - s1 - s2) / 2;
          keep_if_valid(p);
        }
      }
      break;
    case FamilyId::kD8:
      for (D8Variant v : {D8Variant::kAvoidCentre, D8Variant::kAvoidMatched}) {
        FamilyParams p = base;
        p.variant = v;
        p.c = (m2 - 2) / 2;
        keep_if_valid(p);
      }
      break;
    case FamilyId::kD9: {
      FamilyParams p = base;
      p.c = (m2 - 4) / 2;
      keep_if_valid(p);
      break;
    }
  }
  return out;
}

Digraph remark_digraph() {
  Digraph d(5);
  const std::pair<Vertex, Vertex> cycles[] = {{0, 1}, {0, 2}, {1, 2},
                                              {0, 3}, {0, 4}, {3, 4}};
  for (const auto& [u, v] : cycles) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

}  // namespace p22
