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
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "divopt/constraint.h"
#include "divopt/diversity.h"
#include "divopt/generators.h"
#include "divopt/greedy.h"
#include "divopt/gsemo.h"
#include "divopt/local_search.h"
#include "divopt/objective.h"
#include "divopt/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace divopt {
namespace {

using ::divopt::testing::Distances;
using ::divopt::testing::ModularInstance;

void ExpectMonotoneTrace(const RunResult& run) {
  for (size_t i = 1; i < run.trace.size(); ++i) {
    ASSERT_GE(run.trace[i].evaluations, run.trace[i - 1].evaluations);
    ASSERT_GE(run.trace[i].best_objective, run.trace[i - 1].best_objective);
  }
}

// Greedy recomputed from scratch: score every candidate by re-evaluating the
// set functions, keeping the lowest index among ties.
Subset ReferenceGreedy(const Instance& inst, bool mst_rule) {
  Subset x(inst.n());
  for (int step = 0; step < inst.k(); ++step) {
    ItemId pick = -1;
    double best = -std::numeric_limits<double>::infinity();
    for (ItemId u = 0; u < inst.n(); ++u) {
      if (x.Contains(u)) continue;
      Subset y = x;
      y.Insert(u);
      const double gain = inst.quality().Value(y) - inst.quality().Value(x);
      double score;
      if (mst_rule) {
        double nearest = x.empty() ? 0.0 : std::numeric_limits<double>::infinity();
        x.ForEachMember([&](ItemId v) { nearest = std::min(nearest, inst.distance()(u, v)); });
        score = gain + inst.lambda() * nearest;
      } else {
        score = gain / 2 + inst.lambda() * (SumDiversity(y, inst.distance()) -
                                            SumDiversity(x, inst.distance()));
      }
      if (score > best) {
        best = score;
        pick = u;
      }
    }
    x.Insert(pick);
  }
  return x;
}

TEST(GreedySumTest, ThreeItemTrace) {
  const RunResult run = GreedySum(::divopt::testing::ThreeItemInstance());
  EXPECT_EQ(run.best, Subset(3, {0, 2}));
  EXPECT_NEAR(run.objective, 1.8, 1e-12);
  EXPECT_EQ(run.evaluations, 3 + 2);
}

TEST(GreedySumTest, ZeroLambdaPicksHeaviestAndFullK) {
  const Instance inst = ModularInstance({0.2, 0.9, 0.4, 0.7}, Distances(4, {}), 0.0,
                                        UniformConstraint{2});
  EXPECT_EQ(GreedySum(inst).best, Subset(4, {1, 3}));
  const Instance all = inst.WithConstraint(UniformConstraint{4});
  EXPECT_EQ(GreedySum(all).best.size(), 4);
}

TEST(GreedySumTest, MatchesReferenceAndClosedFormCount) {
  RngStream rng(51, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 5 + rng.UniformInt(20);
    const int k = 1 + rng.UniformInt(n);
    const Instance inst = GenSyntheticWeb(n, rng, k, rng.Uniform(0, 2));
    const RunResult run = GreedySum(inst);
    ASSERT_EQ(run.best, ReferenceGreedy(inst, false));
    ASSERT_EQ(run.evaluations, static_cast<int64_t>(k) * n - k * (k - 1) / 2);
    ASSERT_EQ(run.trace.back().evaluations, run.evaluations);
    ExpectMonotoneTrace(run);
  }
}

TEST(GreedySumTest, RejectsMismatchedInstances) {
  const Instance part = ModularInstance({0.1, 0.2}, Distances(2, {}), 1.0,
                                        PartitionConstraint(2, {{0, 1}}, {1}));
  EXPECT_THROW(GreedySum(part), std::invalid_argument);
  const Instance min_inst =
      ModularInstance({0.1, 0.2}, Distances(2, {}), 1.0,
                      UniformConstraint{2, CardinalityMode::kExact}, DiversityKind::kMin);
  EXPECT_THROW(GreedySum(min_inst), std::invalid_argument);
}

TEST(GreedyMinTest, ZeroLambdaReturnsQualityChain) {
  const Instance inst =
      ModularInstance({0.1, 0.9, 0.5, 0.3}, Distances(4, {{{1, 2}, 0.5}}), 0.0,
                      UniformConstraint{2, CardinalityMode::kExact}, DiversityKind::kMin);
  EXPECT_EQ(GreedyMin(inst).best, Subset(4, {1, 2}));
}

TEST(GreedyMinTest, ZeroQualityFindsFarthestFromItemZero) {
  const Instance inst = ModularInstance(
      {0, 0, 0, 0}, Distances(4, {{{0, 1}, 1.2}, {{0, 3}, 1.9}, {{1, 2}, 2.0}}), 1.0,
      UniformConstraint{2, CardinalityMode::kExact}, DiversityKind::kMin);
  const RunResult run = GreedyMin(inst);
  EXPECT_EQ(run.best, Subset(4, {0, 3}));
  EXPECT_DOUBLE_EQ(run.objective, 1.9);
  EXPECT_EQ(run.evaluations, 2 * (4 + 3) + 2);
}

TEST(GreedyMinTest, UniformDistancesTieToQualityChain) {
  const Instance inst =
      ModularInstance({0.1, 0.2, 0.3, 0.4}, Distances(4, {}), 1.0,
                      UniformConstraint{3, CardinalityMode::kExact}, DiversityKind::kMin);
  EXPECT_EQ(GreedyMin(inst).best, Subset(4, {1, 2, 3}));
}

TEST(GreedyMstTest, FirstPickIsBestQualityThenFarthest) {
  const Instance inst = ModularInstance(
      {0, 0, 0}, Distances(3, {{{0, 1}, 1.1}, {{0, 2}, 1.7}}), 1.0,
      UniformConstraint{2, CardinalityMode::kExact}, DiversityKind::kMst);
  EXPECT_EQ(GreedyMst(inst).best, Subset(3, {0, 2}));
}

TEST(GreedyMstTest, MatchesReferenceOnSmallInstances) {
  RngStream rng(52, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = GenSyntheticWeb(6, rng, 3, rng.Uniform(0, 2), DiversityKind::kMst);
    const RunResult run = GreedyMst(inst);
    ASSERT_EQ(run.best, ReferenceGreedy(inst, true));
    ASSERT_NEAR(run.objective,
                inst.quality().Value(run.best) +
                    inst.lambda() * MstDiversity(run.best, inst.distance()),
                1e-12);
  }
}

// True when no feasible exchange beats the objective of the basis x.
bool IsOneSwapLocalOptimum(const Subset& x, const Instance& inst) {
  const double value = Objective(x, inst);
  bool optimal = true;
  x.ForEachMember([&](ItemId out) {
    x.ForEachNonMember([&](ItemId in) {
      Subset y = x;
      y.Remove(out);
      y.Insert(in);
      if (IsIndependent(y, inst.constraint()) &&
          Objective(y, inst) > value * (1 + 1e-12) + 1e-12) {
        optimal = false;
      }
    });
  });
  return optimal;
}

TEST(LocalSearchTest, ColdStartReachesOneSwapOptimum) {
  RngStream rng(53, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = trial % 2 == 0
                              ? GenSyntheticWeb(8, rng, 3, rng.Uniform(0, 2))
                              : GenPartitionInstance(8, 2 + trial % 3, 4, 1.0, rng);
    const RunResult run = LocalSearch(inst, {});
    ASSERT_TRUE(IsBasis(run.best, inst.constraint()));
    ASSERT_TRUE(IsOneSwapLocalOptimum(run.best, inst)) << run.best.ToString();
    ASSERT_NEAR(run.objective, Objective(run.best, inst), 1e-12);
    ExpectMonotoneTrace(run);
  }
}

TEST(LocalSearchTest, StartAtOptimumMakesNoMove) {
  RngStream rng(54, 0);
  const Instance inst = GenSyntheticWeb(8, rng, 3, 1.0);
  const OptResult opt = BruteForceOpt(inst);
  LocalSearchOptions options;
  options.warm_start = opt.opt_subset;
  const RunResult run = LocalSearch(inst, options);
  EXPECT_EQ(run.best, opt.opt_subset);
  EXPECT_EQ(run.evaluations, 3 * (8 - 3));
}

TEST(LocalSearchTest, WarmStartFromGreedyNeverLoses) {
  RngStream rng(55, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = GenSyntheticWeb(20, rng, 5, 1.0);
    const RunResult greedy = GreedySum(inst);
    LocalSearchOptions options;
    options.warm_start = greedy.best;
    ASSERT_GE(LocalSearch(inst, options).objective, greedy.objective - 1e-12);
    options.max_swaps = 2;
    ASSERT_GE(LocalSearch(inst, options).objective, greedy.objective - 1e-12);
  }
}

TEST(LocalSearchTest, BudgetCapsEvaluations) {
  RngStream rng(56, 0);
  const Instance inst = GenSyntheticWeb(30, rng, 5, 1.0);
  LocalSearchOptions options;
  options.max_evaluations = 37;
  const RunResult run = LocalSearch(inst, options);
  EXPECT_LE(run.evaluations, 37);
  EXPECT_TRUE(IsBasis(run.best, inst.constraint()));
}

TEST(LocalSearchTest, RejectsBadOptions) {
  const Instance inst = ::divopt::testing::ThreeItemInstance();
  LocalSearchOptions options;
  options.max_swaps = 3;
  EXPECT_THROW(LocalSearch(inst, options), std::invalid_argument);
  options = {};
  options.warm_start = Subset(3, {0, 1, 2});
  EXPECT_THROW(LocalSearch(inst, options), std::invalid_argument);
}

TEST(PopulationTest, KeepsOnlyIncomparableMembers) {
  const Instance inst = ::divopt::testing::ThreeItemInstance();
  const Formulation form = Formulation::kPlainCardinalitySum;
  auto make = [&](Subset x) {
    Individual ind;
    ind.value = Evaluate(form, x, nullptr, inst);
    ind.subset = std::move(x);
    return ind;
  };
  Population pop(make(Subset(3)));
  EXPECT_TRUE(pop.Offer(make(Subset(3, {1}))));
  EXPECT_EQ(pop.size(), 2u);
  // {0} beats {1} at the same size.
  EXPECT_TRUE(pop.Offer(make(Subset(3, {0}))));
  EXPECT_EQ(pop.size(), 2u);
  EXPECT_FALSE(pop.Offer(make(Subset(3, {2}))));
  // A twin replaces its equal.
  EXPECT_TRUE(pop.Offer(make(Subset(3, {0}))));
  EXPECT_EQ(pop.size(), 2u);
  EXPECT_TRUE(pop.Offer(make(Subset(3, {0, 2}))));
  EXPECT_EQ(pop.members().back().subset, Subset(3, {0, 2}));
  EXPECT_NO_THROW(pop.CheckInvariants(form, inst));
}

TEST(GsemoTest, SingleItemConverges) {
  const Instance inst = ModularInstance({0.7}, {0.0}, 0.0, UniformConstraint{1});
  GsemoConfig config;
  config.budget = Budget::Iterations(100);
  config.rng = RngStream(1, 0);
  const RunResult run = Gsemo(inst, config);
  EXPECT_EQ(run.best, Subset(1, {0}));
  EXPECT_DOUBLE_EQ(run.objective, 0.7);
  EXPECT_EQ(run.evaluations, 100);
}

TEST(GsemoTest, LargeBudgetFindsOptimum) {
  RngStream rng(57, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const Instance inst = GenSyntheticWeb(8, rng, 3, rng.Uniform(0.1, 1.5));
    GsemoConfig config;
    config.budget = Budget::Iterations(20000);
    config.rng = rng.Fork(trial);
    config.check_invariants = true;
    const RunResult run = Gsemo(inst, config);
    ASSERT_NEAR(run.objective, BruteForceOpt(inst).opt_value, 1e-9);
  }
}

TEST(GsemoTest, DefaultBudgets) {
  EXPECT_EQ(DefaultGsemoIterations(100, 10),
            static_cast<int64_t>(std::ceil(std::numbers::e * 100 * 1000 / 2)));
  EXPECT_EQ(DefaultQualityPhaseIterations(10, 3),
            static_cast<int64_t>(std::ceil(std::numbers::e * 10 * 3 * 4)));
  EXPECT_EQ(DefaultDiversityPhaseIterations(10, 3),
            static_cast<int64_t>(std::ceil(std::numbers::e * 10 * 9)));
}

TEST(GsemoTest, InvariantsHoldForEveryFormulation) {
  RngStream rng(58, 0);
  struct Case {
    Formulation form;
    Instance inst;
  };
  const std::vector<Case> cases = {
      {Formulation::kScaledCardinalitySum, GenSyntheticWeb(12, rng, 4, 1.0)},
      {Formulation::kPlainCardinalitySum, GenSyntheticWeb(12, rng, 4, 1.0)},
      {Formulation::kMinQualityPhase,
       GenSyntheticWeb(12, rng, 4, 1.0, DiversityKind::kMin)},
      {Formulation::kMinDiversityPhase,
       GenSyntheticWeb(12, rng, 4, 1.0, DiversityKind::kMin)},
      {Formulation::kMstPermutation,
       GenSyntheticWeb(12, rng, 4, 1.0, DiversityKind::kMst)},
      {Formulation::kMatroidSum, GenPartitionInstance(12, 3, 5, 1.0, rng)},
  };
  for (const Case& c : cases) {
    GsemoConfig config;
    config.formulation = c.form;
    config.budget = Budget::Iterations(3000);
    config.rng = rng.Fork(static_cast<uint64_t>(c.form));
    config.trace_stride = 100;
    config.check_invariants = true;
    std::vector<Individual> population;
    const RunResult run = Gsemo(c.inst, config, &population);
    ExpectMonotoneTrace(run);
    ASSERT_EQ(run.trace.size(), 30u) << FormulationName(c.form);
    for (const Individual& ind : population) {
      ASSERT_TRUE(OffspringFeasible(c.form, ind.subset, c.inst));
      if (ind.perm) {
        std::vector<ItemId> sorted = *ind.perm;
        std::sort(sorted.begin(), sorted.end());
        ASSERT_EQ(sorted, ind.subset.Members());
      }
    }
  }
}

TEST(GsemoTest, IdenticalSeedsGiveIdenticalRuns) {
  RngStream rng(59, 0);
  const Instance inst = GenSyntheticWeb(15, rng, 4, 1.0);
  GsemoConfig config;
  config.budget = Budget::Iterations(2000);
  config.rng = RngStream(7, StreamId(1, "gsemo"));
  config.trace_stride = 50;
  const RunResult a = Gsemo(inst, config);
  const RunResult b = Gsemo(inst, config);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.objective, b.objective);
  EXPECT_EQ(a.trace, b.trace);
}

TEST(GsemoTest, RejectsFormulationMismatch) {
  const Instance inst = ::divopt::testing::ThreeItemInstance();
  GsemoConfig config;
  config.formulation = Formulation::kMinQualityPhase;
  EXPECT_THROW(Gsemo(inst, config), std::invalid_argument);
  config.formulation = Formulation::kScaledCardinalitySum;
  config.warm_start = Subset(3, {0, 1, 2});
  EXPECT_THROW(Gsemo(inst, config), std::invalid_argument);
  config.warm_start.reset();
  config.budget = {};
  EXPECT_THROW(Gsemo(inst, config), std::invalid_argument);
}

TEST(GsemoMinPipelineTest, ZeroLambdaMatchesQualityPhase) {
  RngStream rng(60, 0);
  const Instance inst = GenSyntheticWeb(10, rng, 3, 0.0, DiversityKind::kMin);
  const RunResult run = GsemoMinPipeline(inst, 2000, 2000, RngStream(3, 0));
  // The best three weights, found by the quality phase.
  std::vector<double> w = static_cast<const ModularQuality&>(inst.quality()).weights();
  std::sort(w.rbegin(), w.rend());
  EXPECT_NEAR(run.objective, w[0] + w[1] + w[2], 1e-12);
  EXPECT_EQ(run.evaluations, 4000);
}

TEST(GsemoMinPipelineTest, QuarterOfOptimumOnSmallInstances) {
  RngStream rng(61, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = GenSyntheticWeb(10, rng, 3, rng.Uniform(0.2, 2), DiversityKind::kMin);
    const RunResult run = GsemoMinPipeline(inst, DefaultQualityPhaseIterations(10, 3),
                                           DefaultDiversityPhaseIterations(10, 3),
                                           rng.Fork(trial), 20);
    ASSERT_TRUE(run.feasible);
    ASSERT_TRUE(VerifyRatio(run.objective, inst, 0.25).pass);
    ExpectMonotoneTrace(run);
  }
}

}  // namespace
}  // namespace divopt
