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

#include "p22/detect.hpp"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.hpp"
#include "p22/constructions.hpp"
#include "p22/error.hpp"

namespace p22 {
namespace {

Digraph MinimalP22() {
  Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(0, 2);
  d.add_arc(1, 3);
  d.add_arc(2, 3);
  return d;
}

Digraph Complete(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

TEST(FindWitnessTest, MinimalP22) {
  const auto w = find_witness(MinimalP22());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (P22Witness{0, 1, 2, 3}));
  EXPECT_TRUE(is_valid_witness(MinimalP22(), *w));
}

TEST(FindWitnessTest, TinyOrdersAreFree) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_FALSE(find_witness(Complete(n)).has_value()) << n;
  }
}

TEST(FindWitnessTest, RemarkDigraphIsFree) {
  EXPECT_FALSE(find_witness(remark_digraph()).has_value());
  EXPECT_TRUE(is_free(remark_digraph()));
}

TEST(FindWitnessTest, LexicographicallySmallestWitness) {
  // Pairs (0,3) and (1,4) both qualify; (0,3) wins, with middles 1 < 2.
  Digraph d = MinimalP22();
  Digraph big(5);
  for (const auto& [u, v] : d.arcs()) big.add_arc(u, v);
  big.add_arc(1, 2);
  big.add_arc(2, 4);
  big.add_arc(3, 4);
  const auto w = find_witness(big);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (P22Witness{0, 1, 2, 3}));
}

TEST(IsFreeTest, CompleteOnFourIsNotFree) {
  EXPECT_FALSE(is_free(Complete(4)));
  EXPECT_TRUE(oracle::HasP22(Complete(4)));
  EXPECT_TRUE(is_free(Digraph(9)));
}

TEST(IsFreeTest, AgreesWithNaiveOnAllOrderFourDigraphs) {
  int free_count = 0;
  for (std::uint64_t mask = 0; mask < (1U << 12); ++mask) {
    const Digraph d = oracle::FromMask(4, mask);
    const bool free = is_free(d);
    ASSERT_EQ(free, !oracle::HasP22(d)) << mask;
    free_count += free ? 1 : 0;
    if (auto w = find_witness(d)) {
      ASSERT_TRUE(is_valid_witness(d, *w));
    }
  }
  EXPECT_GT(free_count, 0);
}

TEST(IsFreeTest, RejectsMalformedWitness) {
  const Digraph d = MinimalP22();
  EXPECT_FALSE(is_valid_witness(d, {0, 1, 1, 3}));
  EXPECT_FALSE(is_valid_witness(d, {0, 1, 2, 0}));
  EXPECT_FALSE(is_valid_witness(d, {0, 1, 2, 9}));
  EXPECT_FALSE(is_valid_witness(d, {3, 1, 2, 0}));
}

TEST(StaysFreeAfterTest, CompletingTheMinimalP22) {
  Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(1, 3);
  d.add_arc(0, 2);
  EXPECT_FALSE(stays_free_after(d, 2, 3));
}

TEST(StaysFreeAfterTest, EmptyDigraphAcceptsAnyArc) {
  const Digraph d(5);
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) {
      if (u != v) {
        EXPECT_TRUE(stays_free_after(d, u, v));
      }
    }
  }
}

TEST(StaysFreeAfterTest, ContractViolations) {
  Digraph d(3);
  d.add_arc(0, 1);
  EXPECT_THROW((void)stays_free_after(d, 0, 1), ContractError);
  EXPECT_THROW((void)stays_free_after(d, 2, 2), ContractError);
}

TEST(StaysFreeAfterTest, AgreesWithFullRecheck) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> pick(0, 7);
  int checked = 0;
  int rejected = 0;
  while (checked < 500) {
    const Digraph d = oracle::RandomFree(8, rng, 20 + checked % 30);
    const int a = pick(rng);
    const int b = pick(rng);
    if (a == b || d.has_arc(a, b)) continue;
    const bool expected = !oracle::HasP22(with_arc(d, a, b));
    ASSERT_EQ(stays_free_after(d, a, b), expected);
    rejected += expected ? 0 : 1;
    ++checked;
  }
  EXPECT_GT(rejected, 0);
}

TEST(CountPairsTest, SmallCases) {
  EXPECT_EQ(count_pairs_with_multi_middles(MinimalP22()), 1);
  EXPECT_EQ(count_pairs_with_multi_middles(remark_digraph()), 0);
}

TEST(CountPairsTest, AgreesWithNaiveAndIsZeroIffFree) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = oracle::Random(8, 0.1 + 0.002 * trial, rng);
    const int count = count_pairs_with_multi_middles(d);
    ASSERT_EQ(count, oracle::CountPairsWithTwoMiddles(d));
    ASSERT_EQ(count == 0, is_free(d));
  }
}

TEST(DetectPropertyTest, ReverseKeepsFreeness) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const Digraph d = oracle::Random(7, 0.25, rng);
    ASSERT_EQ(is_free(d), is_free(reverse(d)));
  }
}

TEST(DetectPropertyTest, SupersetOfNonFreeIsNotFree) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> pick(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    Digraph d = oracle::Random(7, 0.3, rng);
    if (is_free(d)) continue;
    for (int extra = 0; extra < 5; ++extra) {
      const int u = pick(rng);
      const int v = pick(rng);
      if (u != v) d.add_arc(u, v);
    }
    ASSERT_FALSE(is_free(d));
  }
}

}  // namespace
}  // namespace p22
