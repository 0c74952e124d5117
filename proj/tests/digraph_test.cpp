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

#include "p22/digraph.hpp"

#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.hpp"
#include "p22/constructions.hpp"
#include "p22/error.hpp"

namespace p22 {
namespace {

using ::testing::ElementsAre;

std::vector<int> Members(VertexSet s) { return s.to_vector(); }

VertexSet RandomSubset(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  VertexSet s;
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) s.insert(v);
  }
  return s;
}

TEST(VertexSetTest, BasicOperations) {
  VertexSet s{1, 4, 63};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(63));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.min(), 1);
  EXPECT_THAT(Members(s), ElementsAre(1, 4, 63));
  s.erase(4);
  EXPECT_THAT(Members(s | VertexSet{2}), ElementsAre(1, 2, 63));
  EXPECT_THAT(Members(VertexSet::Range(2, 5) - VertexSet{3}), ElementsAre(2, 4));
  EXPECT_EQ(VertexSet::All(64).size(), 64);
  EXPECT_THROW(s.insert(64), RangeError);
}

TEST(DigraphTest, NewDigraphIsEmpty) {
  const Digraph d(3);
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.arc_count(), 0);
  const Digraph big(13);
  for (Vertex v : big.vertices()) EXPECT_EQ(big.out_degree(v), 0);
}

TEST(DigraphTest, RejectsBadOrder) {
  EXPECT_THROW(Digraph(0), SizeError);
  EXPECT_THROW(Digraph(65), SizeError);
  EXPECT_NO_THROW(Digraph(64));
}

TEST(DigraphTest, AddArcIsIdempotentAndStrict) {
  Digraph d(2);
  d.add_arc(0, 1);
  EXPECT_EQ(d.arc_count(), 1);
  d.add_arc(0, 1);
  EXPECT_EQ(d.arc_count(), 1);
  EXPECT_THROW(d.add_arc(0, 0), LoopError);
  EXPECT_THROW(d.add_arc(0, 2), RangeError);
  EXPECT_THROW(d.add_arc(-1, 1), RangeError);
  EXPECT_THROW((void)d.has_arc(2, 0), RangeError);
  d.remove_arc(0, 1);
  d.remove_arc(0, 1);
  EXPECT_EQ(d.arc_count(), 0);
}

TEST(DigraphTest, ReverseOfTwoCycleAndPath) {
  Digraph cycle(2);
  cycle.add_arc(0, 1);
  cycle.add_arc(1, 0);
  EXPECT_EQ(reverse(cycle), cycle);

  Digraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  const Digraph r = reverse(path);
  EXPECT_THAT(r.arcs(), ElementsAre(std::pair{1, 0}, std::pair{2, 1}));
}

TEST(DigraphTest, NeighborhoodsOfTwoCycle) {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  EXPECT_THAT(Members(d.in_neighbors(0)), ElementsAre(1));
  EXPECT_TRUE(d.out_neighbors(2).empty());
  EXPECT_THROW((void)d.out_neighbors(3), RangeError);
}

TEST(DigraphTest, StarCentreReachesEveryLeaf) {
  const Digraph s = build_S(5);
  EXPECT_EQ(s.out_degree(1), 4);
  EXPECT_EQ(s.out_degree(0), 1);
  EXPECT_THAT(Members(s.out_neighbors(1)), ElementsAre(0, 2, 3, 4));
}

TEST(DigraphTest, ArcsBetweenOnFamilyMember) {
  FamilyParams p;
  p.family = FamilyId::kD1;
  p.n = 13;
  const Digraph d = build_family(p);
  const VertexSet top = VertexSet::Range(0, 7);
  const VertexSet bottom = VertexSet::Range(7, 13);
  EXPECT_EQ(arcs_between(d, bottom, top), 42);
  EXPECT_EQ(arcs_between(d, VertexSet{7}, VertexSet{8, 9}), 0);
  EXPECT_EQ(arcs_between(d, d.vertices(), d.vertices()), d.arc_count());
}

TEST(DigraphTest, MatchesPerfectMatchingOnly) {
  Digraph d(4);
  d.add_arc(0, 2);
  d.add_arc(1, 3);
  EXPECT_TRUE(matches(d, {0, 1}, {2, 3}));
  d.add_arc(0, 3);
  EXPECT_FALSE(matches(d, {0, 1}, {2, 3}));
  EXPECT_FALSE(matches(d, {0}, {2, 3}));
  EXPECT_THROW((void)matches(d, {0, 1}, {1, 2}), ContractError);
}

TEST(DigraphTest, FamilyMatchingArcsFormMatching) {
  FamilyParams p;
  p.family = FamilyId::kD1;
  p.n = 13;
  const Digraph d = build_family(p);
  EXPECT_TRUE(matches(d, VertexSet::Range(1, 7), VertexSet::Range(7, 13)));
}

TEST(DigraphTest, TauAndAlpha) {
  Digraph cycle(2);
  cycle.add_arc(0, 1);
  cycle.add_arc(1, 0);
  EXPECT_EQ(tau(cycle, 0), 1);

  Digraph source(3);
  source.add_arc(0, 1);
  EXPECT_EQ(tau(source, 0), 0);
  EXPECT_EQ(alpha(Digraph(4), 2), 0);

  Digraph complete(3);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v) complete.add_arc(u, v);
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(alpha(complete, v), oracle::Alpha(complete, v));
    EXPECT_EQ(tau(complete, v), 2);
  }

  const FamilyParams p = enumerate_params(FamilyId::kD3, 16).front();
  const Digraph d3 = build_family(p);
  // z = 1 sits on two 2-cycles: with y = 0 and with v = 9.
  EXPECT_EQ(tau(d3, 1), 2);
  EXPECT_TRUE(d3.has_arc(1, 9) && d3.has_arc(9, 1));
}

TEST(DigraphTest, MaxOutDegreeVertices) {
  const Digraph s = build_S(4);
  EXPECT_EQ(max_out_degree(s), 3);
  EXPECT_THAT(Members(max_out_degree_vertices(s)), ElementsAre(1));
}

TEST(DigraphTest, InducedSubdigraphAndRelabel) {
  const Digraph s = build_S(4);
  const Digraph sub = induced_subdigraph(s, {1, 2, 3});
  EXPECT_EQ(sub.order(), 3);
  EXPECT_THAT(sub.arcs(), ElementsAre(std::pair{0, 1}, std::pair{0, 2}));

  const std::vector<Vertex> perm{3, 2, 1, 0};
  const Digraph r = relabel(s, perm);
  EXPECT_TRUE(r.has_arc(2, 0));
  EXPECT_TRUE(r.has_arc(3, 2));
  const std::vector<Vertex> bad{0, 0, 1, 2};
  EXPECT_THROW((void)relabel(s, bad), ContractError);
}

TEST(DigraphPropertyTest, DegreeSumsEqualArcCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::Random(2 + trial % 15, 0.3, rng);
    int out = 0;
    int in = 0;
    for (Vertex v : d.vertices()) {
      out += d.out_degree(v);
      in += d.in_degree(v);
    }
    EXPECT_EQ(out, d.arc_count());
    EXPECT_EQ(in, d.arc_count());
  }
}

TEST(DigraphPropertyTest, ReverseIsInvolutionAndSwapsDegrees) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::Random(8, 0.4, rng);
    const Digraph r = reverse(d);
    EXPECT_EQ(reverse(r), d);
    EXPECT_EQ(r.arc_count(), d.arc_count());
    for (Vertex v : d.vertices()) {
      EXPECT_EQ(r.out_degree(v), d.in_degree(v));
      EXPECT_EQ(r.in_degree(v), d.out_degree(v));
    }
  }
}

TEST(DigraphPropertyTest, ArcsBetweenAgreesWithNaiveLoop) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 16;
    const Digraph d = oracle::Random(n, 0.35, rng);
    const VertexSet s = RandomSubset(n, rng);
    const VertexSet t = RandomSubset(n, rng);
    ASSERT_EQ(arcs_between(d, s, t),
              oracle::ArcsBetween(d, s.to_vector(), t.to_vector()));
  }
}

TEST(DigraphPropertyTest, MatchingImpliesEqualSizesAndArcCount) {
  std::mt19937_64 rng(14);
  int matched = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Digraph d = oracle::Random(6, 0.25, rng);
    const VertexSet s = RandomSubset(3, rng);
    const VertexSet t = VertexSet::Range(3, 6) - RandomSubset(6, rng);
    const bool m = matches(d, s, t);
    ASSERT_EQ(m, oracle::Matches(d, s.to_vector(), t.to_vector()));
    if (m) {
      ++matched;
      EXPECT_EQ(s.size(), t.size());
      EXPECT_EQ(arcs_between(d, s, t), s.size());
    }
  }
  EXPECT_GT(matched, 0);
}

}  // namespace
}  // namespace p22
