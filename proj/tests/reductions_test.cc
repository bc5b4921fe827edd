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
#include <random>
#include <set>
#include <vector>

#include "graphfair/errors.h"
#include "graphfair/fairness.h"
#include "graphfair/oracle.h"
#include "graphfair/reductions.h"
#include "gtest/gtest.h"
#include "testing/corpus.h"
#include "testing/fixtures.h"

namespace graphfair {
namespace {

OracleOptions Orientations() {
  OracleOptions options;
  options.mode = SearchMode::kOrientations;
  return options;
}

void ExpectValuesIn(const GraphicalInstance& g, Utility d) {
  for (const Edge& e : g.edges()) {
    for (Utility x : {e.value_a, e.value_b}) {
      EXPECT_TRUE(x == 0 || x == 1 || x == d) << x;
    }
  }
}

// Orientation from the forward direction of the EF reduction: the planted
// vertex s_i of each class keeps all its unit edges and hands its hub edge
// to w_i; every other class member takes its hub edge.
Allocation PlantedOrientation(const McisInstance& mcis,
                              const GraphicalInstance& g,
                              const std::vector<int>& planted) {
  std::vector<AgentId> owners(g.num_items(), kUnassigned);
  const std::set<int> s(planted.begin(), planted.end());
  for (ItemId item = 0; item < g.num_items(); ++item) {
    const Edge& e = g.edge(item);
    if (e.b >= mcis.num_vertices()) {
      owners[item] = s.count(e.a) ? e.b : e.a;
    } else {
      owners[item] = s.count(e.b) ? e.b : e.a;
    }
  }
  return Allocation(owners);
}

TEST(McisInstanceTest, RejectsIrregularGraph) {
  EXPECT_THROW(McisInstance({{0, 1}, {2}}, {{0, 1}, {1, 2}}), InputError);
}

TEST(McisInstanceTest, RejectsOverlappingClasses) {
  EXPECT_THROW(McisInstance({{0, 1}, {1}}, {{0, 1}}), InputError);
}

TEST(McisInstanceTest, RejectsUncoveredVertex) {
  EXPECT_THROW(McisInstance({{0}, {2}}, {}), InputError);
}

TEST(McisInstanceTest, Degree) {
  EXPECT_EQ(testing::McisC4().degree(), 2);
  EXPECT_TRUE(testing::McisC4().Adjacent(3, 0));
  EXPECT_FALSE(testing::McisC4().Adjacent(0, 2));
}

TEST(ReduceMcisToEfTest, SizesAndValues) {
  for (const McisInstance& mcis : {testing::McisC4(), testing::McisK22()}) {
    const GraphicalInstance g = ReduceMcisToEf(mcis);
    EXPECT_EQ(g.num_agents(), 6);
    EXPECT_EQ(g.num_items(), 8);
    ExpectValuesIn(g, 2);
    for (int v = 0; v < 4; ++v) {
      const AgentId hub = EfHubAgent(mcis, mcis.ClassOf(v));
      const ItemId item = g.FindItem(v, hub);
      ASSERT_NE(item, kUnassigned);
      EXPECT_EQ(g.Value(v, item), 2);
      EXPECT_EQ(g.Value(hub, item), 2);
    }
  }
}

TEST(ReduceMcisToEfTest, C4HasEnvyFreeAllocation) {
  const GraphicalInstance g = ReduceMcisToEf(testing::McisC4());
  const auto witness = ExistsFair(g, Fairness::kEnvyFree);
  ASSERT_TRUE(witness.has_value());
  const auto set = ExtractIndependentSet(testing::McisC4(), *witness);
  ASSERT_TRUE(set.has_value());
  EXPECT_TRUE(IsColorfulIndependentSet(testing::McisC4(), *set));
}

TEST(ReduceMcisToEfTest, K22HasNoEnvyFreeAllocation) {
  const GraphicalInstance g = ReduceMcisToEf(testing::McisK22());
  EXPECT_FALSE(ExistsFair(g, Fairness::kEnvyFree).has_value());
}

TEST(ReduceMcisToEfTest, DegreeZeroRejected) {
  const McisInstance lonely({{0}}, {});
  EXPECT_EQ(lonely.degree(), 0);
  EXPECT_THROW(ReduceMcisToEf(lonely), InputError);
  EXPECT_THROW(ReduceMcisToEmEfx(lonely), InputError);
  EXPECT_THROW(ReduceMcisToUmEfx(lonely), InputError);
}

TEST(ReduceMcisToUmEfxTest, SizesAndValues) {
  for (const McisInstance& mcis : {testing::McisC4(), testing::McisK22()}) {
    const GraphicalInstance g = ReduceMcisToUmEfx(mcis);
    EXPECT_EQ(g.num_agents(), 12);
    EXPECT_EQ(g.num_items(), 14);
    ExpectValuesIn(g, 2);
    for (int c = 0; c < mcis.num_classes(); ++c) {
      EXPECT_EQ(g.VMax(UmEfxPathAgent(mcis, c, 4)), 0);
      const ItemId first = g.FindItem(UmEfxPathAgent(mcis, c, 1),
                                      UmEfxPathAgent(mcis, c, 2));
      ASSERT_NE(first, kUnassigned);
      EXPECT_EQ(g.Value(UmEfxPathAgent(mcis, c, 1), first), 0);
      EXPECT_EQ(g.Value(UmEfxPathAgent(mcis, c, 2), first), 1);
    }
  }
}

TEST(ReduceMcisToUmEfxTest, RejectsDegreeOne) {
  const McisInstance matching({{0}, {1}}, {{0, 1}});
  EXPECT_NO_THROW(ReduceMcisToEf(matching));
  EXPECT_THROW(ReduceMcisToUmEfx(matching), InputError);
}

// Neither gadget has 0/0 edges, so utilitarian-optimal allocations are
// orientations and the orientation space decides the question.
TEST(ReduceMcisToUmEfxTest, StrictGadgetDecisions) {
  const auto strict = UmEfxGadget::kStrictMiddleEdge;
  EXPECT_TRUE(DecideUmPlusEfx(ReduceMcisToUmEfx(testing::McisC4(), strict),
                              Orientations()));
  EXPECT_FALSE(DecideUmPlusEfx(ReduceMcisToUmEfx(testing::McisK22(), strict),
                               Orientations()));
}

// With the tied middle edge, w_i^2 can take (w_i^2, w_i^3) and every class
// member keeps its own hub edge. That allocation is envy-free and
// utilitarian-optimal on the no-instance K_{2,2}.
TEST(ReduceMcisToUmEfxTest, PublishedGadgetAdmitsNoInstance) {
  const McisInstance mcis = testing::McisK22();
  const GraphicalInstance g = ReduceMcisToUmEfx(mcis);
  std::vector<AgentId> owners(g.num_items());
  for (ItemId item = 0; item < g.num_items(); ++item) {
    const Edge& e = g.edge(item);
    owners[item] = e.a;
    for (int c = 0; c < mcis.num_classes(); ++c) {
      if (e.a == UmEfxPathAgent(mcis, c, 1)) owners[item] = e.b;
    }
  }
  const Allocation a(owners);
  EXPECT_TRUE(IsEnvyFree(g, a));
  EXPECT_EQ(Welfare(g, a).utilitarian, OptimalUtilitarianWelfare(g));
  EXPECT_TRUE(DecideUmPlusEfx(g, Orientations()));
  EXPECT_TRUE(DecideUmPlusEfx(ReduceMcisToUmEfx(testing::McisC4()),
                              Orientations()));
}

TEST(ReduceMcisToUmEfxTest, StrictGadgetValues) {
  const McisInstance mcis = testing::McisC4();
  const GraphicalInstance g =
      ReduceMcisToUmEfx(mcis, UmEfxGadget::kStrictMiddleEdge);
  const AgentId w2 = UmEfxPathAgent(mcis, 0, 2);
  const AgentId w3 = UmEfxPathAgent(mcis, 0, 3);
  const ItemId middle = g.FindItem(w2, w3);
  EXPECT_EQ(g.Value(w2, middle), 2);
  EXPECT_EQ(g.Value(w3, middle), 3);
}

TEST(ReduceMcisToEmEfxTest, ThresholdIsDegree) {
  const auto c4 = ReduceMcisToEmEfx(testing::McisC4());
  EXPECT_EQ(c4.threshold, 2);
  EXPECT_EQ(c4.instance, ReduceMcisToEf(testing::McisC4()));
  EXPECT_TRUE(DecideEmEfxThreshold(c4.instance, c4.threshold));
  const auto k22 = ReduceMcisToEmEfx(testing::McisK22());
  EXPECT_FALSE(DecideEmEfxThreshold(k22.instance, k22.threshold));
}

TEST(SolveMcisBruteForceTest, Fixtures) {
  EXPECT_EQ(SolveMcisBruteForce(testing::McisC4()), (std::vector<int>{0, 2}));
  EXPECT_FALSE(SolveMcisBruteForce(testing::McisK22()).has_value());
}

TEST(SolveMcisBruteForceTest, SingleClass) {
  const McisInstance one({{0, 1, 2}}, {{0, 1}, {1, 2}, {2, 0}});
  const auto set = SolveMcisBruteForce(one);
  ASSERT_TRUE(set.has_value());
  EXPECT_EQ(set->size(), 1u);
}

TEST(SolveMcisBruteForceTest, BudgetGuard) {
  EXPECT_THROW(SolveMcisBruteForce(testing::McisC4(), 3), CapacityError);
}

TEST(ExtractIndependentSetTest, RecoversPlantedSet) {
  for (const std::vector<int>& planted :
       {std::vector<int>{0, 2}, std::vector<int>{1, 3}}) {
    const McisInstance mcis = testing::McisC4();
    const GraphicalInstance g = ReduceMcisToEf(mcis);
    const Allocation a = PlantedOrientation(mcis, g, planted);
    ASSERT_TRUE(IsEnvyFree(g, a));
    EXPECT_EQ(ExtractIndependentSet(mcis, a), planted);
  }
}

TEST(ExtractIndependentSetTest, RejectsAllocationWithEnvy) {
  const McisInstance mcis = testing::McisC4();
  const GraphicalInstance g = ReduceMcisToEf(mcis);
  const Allocation all_to_zero(std::vector<AgentId>(g.num_items(), 0));
  EXPECT_THROW(ExtractIndependentSet(mcis, all_to_zero), PreconditionError);
}

// Random 3-regular MCIS instances: every EF orientation of the reduced
// instance yields a colorful independent set, and existence matches.
TEST(ReductionPropertyTest, RandomRegularInstances) {
  std::mt19937_64 rng(4);
  int checked = 0;
  while (checked < 6) {
    const auto mcis = testing::RandomRegularMcis(rng, 6, 3, 2);
    if (!mcis) continue;
    ++checked;
    const GraphicalInstance g = ReduceMcisToEf(*mcis);
    ExpectValuesIn(g, 3);
    EXPECT_EQ(g.num_agents(), 6 + 2);
    EXPECT_EQ(g.num_items(), 9 + 6);
    bool any = false;
    ForEachAllocation(g, SearchMode::kOrientations, 1u << 20,
                      [&](std::span<const AgentId> owners) {
                        const Allocation a(
                            std::vector<AgentId>(owners.begin(), owners.end()));
                        if (!IsEnvyFree(g, a)) return true;
                        any = true;
                        const auto set = ExtractIndependentSet(*mcis, a);
                        EXPECT_TRUE(set && IsColorfulIndependentSet(*mcis, *set));
                        return true;
                      });
    EXPECT_EQ(any, SolveMcisBruteForce(*mcis).has_value());
  }
}

}  // namespace
}  // namespace graphfair
