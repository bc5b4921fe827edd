// Copyright 2026 The graphfair Authors
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

#include <algorithm>
#include <optional>

#include "graphfair/binary.h"
#include "graphfair/errors.h"
#include "graphfair/fairness.h"
#include "graphfair/oracle.h"
#include "gtest/gtest.h"
#include "testing/corpus.h"
#include "testing/fixtures.h"
#include "testing/naive.h"

namespace graphfair {
namespace {

TEST(SolveEfBinaryTest, SingleSymmetricEdgeHasNoEfAllocation) {
  EXPECT_FALSE(SolveEfBinary(testing::SingleSymmetricEdge()).has_value());
}

TEST(SolveEfBinaryTest, PathWithoutSpecialVertex) {
  EXPECT_FALSE(SolveEfBinary(testing::Path3()).has_value());
  EXPECT_FALSE(testing::NaiveExistsEfAllocation(testing::Path3()));
}

TEST(SolveEfBinaryTest, TriangleGetsCyclicOrientation) {
  const auto result = SolveEfBinary(testing::Triangle());
  ASSERT_TRUE(result.has_value());
  EXPECT_TRUE(IsEnvyFree(testing::Triangle(), *result));
  for (Utility u : AgentUtilities(testing::Triangle(), *result)) {
    EXPECT_EQ(u, 1);
  }
}

TEST(SolveEfBinaryTest, AsymmetricEdgeGoesToItsValuer) {
  EXPECT_EQ(SolveEfBinary(testing::SingleAsymmetricEdge()), Allocation({0}));
}

TEST(SolveEfBinaryTest, RejectsNonBinaryInstance) {
  EXPECT_THROW(SolveEfBinary(testing::Star3()), InputError);
  EXPECT_THROW(SolveEfxBinary(testing::Star3()), InputError);
}

TEST(SolveEfBinaryTest, TreeRootedAtSpecialVertex) {
  // Path 1-0-2 with a pendant asymmetric edge making 0 special.
  const GraphicalInstance g(4, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 0}});
  const auto result = SolveEfBinary(g);
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(*result, Allocation({1, 2, 0}));
}

TEST(SolveEfxBinaryTest, PathRootedAtMinimumDegreeVertex) {
  const Allocation out = SolveEfxBinary(testing::Path3());
  EXPECT_EQ(out, Allocation({1, 2}));
  EXPECT_TRUE(IsEfx(testing::Path3(), out));
  EXPECT_EQ(Welfare(testing::Path3(), out).utilitarian, 2);
}

TEST(SolveEfxBinaryTest, TriangleIsEnvyFree) {
  EXPECT_TRUE(IsEnvyFree(testing::Triangle(),
                         SolveEfxBinary(testing::Triangle())));
}

TEST(SolveEfxBinaryTest, SingleSymmetricEdge) {
  EXPECT_TRUE(IsEfx(testing::SingleSymmetricEdge(),
                    SolveEfxBinary(testing::SingleSymmetricEdge())));
}

TEST(SolveEfxBinaryTest, ZeroZeroEdgeGoesToNonEnviedAgent) {
  // Agent 1 would be envied by 0 if it held the 0/0 edge alongside (0,1).
  const GraphicalInstance g(3, {{0, 1, 1, 1}, {1, 2, 0, 0}, {0, 2, 0, 1}});
  const Allocation out = SolveEfxBinary(g);
  EXPECT_TRUE(IsEfx(g, out));
  EXPECT_TRUE(IsNonWasteful(g, out));
}

// Exhaustive: every connected graph with <= 5 vertices and <= 6 edges under
// every {0,1} labeling. Existence is compared against the orientation
// oracle; the allocation/orientation equivalence is checked separately.
TEST(BinaryExhaustiveTest, SolversAgreeWithOracle) {
  int instances = 0;
  for (const testing::SimpleGraph& graph : testing::ConnectedGraphs(5, 6)) {
    testing::ForEachBinaryLabeling(graph, [&](const GraphicalInstance& g) {
      ++instances;
      const auto ef = SolveEfBinary(g);
      ASSERT_EQ(ef.has_value(), testing::NaiveExistsEfOrientation(g));
      if (ef) {
        ASSERT_TRUE(testing::NaiveEnvyFree(g, ef->owners()));
        ASSERT_TRUE(testing::NaiveOrientation(g, ef->owners()));
      }
      const Allocation efx = SolveEfxBinary(g);
      ASSERT_TRUE(testing::NaiveEfx(g, efx.owners()));
      ASSERT_TRUE(testing::NaiveNonWasteful(g, efx.owners()));
      ASSERT_EQ(Welfare(g, efx).utilitarian, OptimalUtilitarianWelfare(g));
    });
  }
  EXPECT_GT(instances, 10000);
}

// Egalitarian and Nash optimality over all allocations, on instances small
// enough for n^m enumeration.
TEST(BinaryExhaustiveTest, EfxOutputIsEgalitarianAndNashOptimal) {
  for (const testing::SimpleGraph& graph : testing::ConnectedGraphs(4, 5)) {
    testing::ForEachBinaryLabeling(graph, [&](const GraphicalInstance& g) {
      const auto best = testing::NaiveOptimaOver(
          g, [](const testing::Owners&) { return true; });
      const Allocation efx = SolveEfxBinary(g);
      const auto u = testing::NaiveUtilities(g, efx.owners());
      std::uint64_t product = 1;
      for (auto x : u) product *= static_cast<std::uint64_t>(x);
      ASSERT_EQ(*std::min_element(u.begin(), u.end()), best.egalitarian);
      ASSERT_EQ(product, best.nash);
    });
  }
}

TEST(BinaryRandomTest, LargerInstances) {
  const auto corpus = testing::RandomInstances(
      77, 150, 9, {0, 1}, SearchMode::kOrientations, 1u << 16);
  for (const GraphicalInstance& g : corpus) {
    const auto ef = SolveEfBinary(g);
    ASSERT_EQ(ef.has_value(), testing::NaiveExistsEfOrientation(g));
    if (ef) ASSERT_TRUE(IsEnvyFree(g, *ef) && IsOrientation(g, *ef));
    const Allocation efx = SolveEfxBinary(g);
    ASSERT_TRUE(IsEfx(g, efx) && IsNonWasteful(g, efx));
  }
}

}  // namespace
}  // namespace graphfair
