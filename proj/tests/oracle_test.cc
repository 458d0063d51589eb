// Copyright 2026 The Authors.
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
#include <stdexcept>
#include <vector>

#include "divopt/generators.h"
#include "divopt/greedy.h"
#include "divopt/objective.h"
#include "divopt/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace divopt {
namespace {

using ::divopt::testing::Distances;
using ::divopt::testing::ModularInstance;

// Scans every mask from the full set down to the empty set.
double ReversedEnumerationOpt(const Instance& inst) {
  const int n = inst.n();
  double best = -1.0;
  for (int64_t mask = (int64_t{1} << n) - 1; mask >= 0; --mask) {
    Subset x(n);
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) x.Insert(i);
    }
    if (IsFeasibleFinal(x, inst.constraint())) best = std::max(best, Objective(x, inst));
  }
  return best;
}

TEST(BruteForceOptTest, ThreeItemExample) {
  const OptResult opt = BruteForceOpt(::divopt::testing::ThreeItemInstance());
  EXPECT_NEAR(opt.opt_value, 1.8, 1e-12);
  EXPECT_EQ(opt.opt_subset, Subset(3, {0, 2}));
  // Empty set, three singletons and three pairs.
  EXPECT_EQ(opt.enumerated, 7);
  const OptResult exact =
      BruteForceOpt(::divopt::testing::ThreeItemInstance(CardinalityMode::kExact));
  EXPECT_EQ(exact.enumerated, 3);
}

TEST(BruteForceOptTest, ZeroLambdaTakesHeaviestWeights) {
  const Instance inst = ModularInstance({0.3, 0.8, 0.1, 0.5, 0.6}, Distances(5, {}), 0.0,
                                        UniformConstraint{3});
  EXPECT_NEAR(BruteForceOpt(inst).opt_value, 0.8 + 0.6 + 0.5, 1e-12);
}

TEST(BruteForceOptTest, EmptyFamily) {
  const Instance inst = ModularInstance({0.3, 0.8}, Distances(2, {}), 1.0,
                                        UniformConstraint{0});
  const OptResult opt = BruteForceOpt(inst);
  EXPECT_DOUBLE_EQ(opt.opt_value, 0.0);
  EXPECT_TRUE(opt.opt_subset.empty());
}

TEST(BruteForceOptTest, GuardIsEnforced) {
  RngStream rng(71, 0);
  EXPECT_THROW(BruteForceOpt(GenSyntheticWeb(21, rng, 2, 1.0)), std::invalid_argument);
}

TEST(BruteForceOptTest, AgreesWithReversedEnumeration) {
  RngStream rng(72, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + rng.UniformInt(8);
    Instance inst = GenSyntheticWeb(n, rng, 2 + rng.UniformInt(3), rng.Uniform(0, 2),
                                    static_cast<DiversityKind>(trial % 3),
                                    trial % 3 == 0 && trial % 2 ? CardinalityMode::kAtMost
                                                                : CardinalityMode::kExact);
    if (trial % 5 == 4) inst = GenPartitionInstance(n, 2, 4, 1.0, rng);
    const OptResult opt = BruteForceOpt(inst);
    ASSERT_DOUBLE_EQ(opt.opt_value, ReversedEnumerationOpt(inst));
    ASSERT_TRUE(IsFeasibleFinal(opt.opt_subset, inst.constraint()));
    ASSERT_DOUBLE_EQ(Objective(opt.opt_subset, inst), opt.opt_value);
  }
}

TEST(VerifyRatioTest, Examples) {
  const RatioCheck zero = VerifyRatio(0.0, 0.0, 0.5);
  EXPECT_TRUE(zero.pass);
  EXPECT_DOUBLE_EQ(zero.achieved, 1.0);
  EXPECT_FALSE(VerifyRatio(1.0, 1.0, 1.01).pass);
  EXPECT_TRUE(VerifyRatio(0.5 - 1e-10, 1.0, 0.5).pass);
  EXPECT_FALSE(VerifyRatio(0.49, 1.0, 0.5).pass);
  const Instance single = ModularInstance({0.0}, {0.0}, 1.0, UniformConstraint{1});
  EXPECT_TRUE(VerifyRatio(0.0, single, 0.5).pass);
}

TEST(VerifyRatioTest, GreedySumHalfApproximationSweep) {
  RngStream rng(73, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6 + rng.UniformInt(8);
    const Instance inst = GenSyntheticWeb(n, rng, 2 + rng.UniformInt(3), rng.Uniform(0, 2));
    ASSERT_TRUE(VerifyRatio(GreedySum(inst).objective, inst, 0.5).pass);
  }
}

TEST(HardMinInstanceTest, StructureAtEighteen) {
  const Instance inst = HardMinInstance(18);
  EXPECT_EQ(inst.k(), 9);
  EXPECT_EQ(inst.diversity(), DiversityKind::kMin);
  EXPECT_DOUBLE_EQ(inst.distance()(0, 5), 2.0);
  EXPECT_DOUBLE_EQ(inst.distance()(17, 0), 2.0);
  EXPECT_DOUBLE_EQ(inst.distance()(3, 5), 1.0);
  EXPECT_TRUE(inst.distance().is_metric());
  EXPECT_DOUBLE_EQ(Objective(Subset(18, {0, 4}), inst), 2.0 + 18 / 9.0);
  EXPECT_DOUBLE_EQ(BruteForceOpt(inst).opt_value, 18 / 2 + 1);
  EXPECT_THROW(HardMinInstance(20), std::invalid_argument);
}

}  // namespace
}  // namespace divopt
