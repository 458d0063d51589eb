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
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "divopt/diversity.h"
#include "divopt/errors.h"
#include "divopt/generators.h"
#include "divopt/mutual_information.h"
#include "divopt/objective.h"
#include "divopt/oracle.h"
#include "divopt/quality.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace divopt {
namespace {

using ::divopt::testing::Distances;

// Items 0, 1, 2 with d01 = 1, d02 = 1.5, d12 = 2.
DistanceMatrix Triangle() {
  return DistanceMatrix(3, Distances(3, {{{0, 1}, 1.0}, {{0, 2}, 1.5}, {{1, 2}, 2.0}}));
}

DistanceMatrix RandomMetric(int n, RngStream& rng) {
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) d[u * n + v] = d[v * n + u] = rng.Uniform(1, 2);
  }
  return DistanceMatrix(n, std::move(d));
}

// Points in the unit square; Euclidean distances.
DistanceMatrix RandomPlanar(int n, RngStream& rng) {
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = rng.Uniform(0, 1);
    ys[i] = rng.Uniform(0, 1);
  }
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) d[u * n + v] = std::hypot(xs[u] - xs[v], ys[u] - ys[v]);
  }
  return DistanceMatrix(n, std::move(d));
}

Subset RandomSubset(int n, RngStream& rng) {
  Subset x(n);
  for (int i = 0; i < n; ++i) {
    if (rng.Bernoulli(0.5)) x.Insert(i);
  }
  return x;
}

TEST(SumDiversityTest, EmptyAndTriangle) {
  const DistanceMatrix d = Triangle();
  EXPECT_DOUBLE_EQ(SumDiversity(Subset(3), d), 0.0);
  EXPECT_DOUBLE_EQ(SumDiversity(Subset(3, {0, 1, 2}), d), 4.5);
}

TEST(SumDiversityTest, MarginalExamples) {
  const DistanceMatrix d(2, Distances(2, {{{0, 1}, 1.7}}));
  EXPECT_DOUBLE_EQ(SumDiversityMarginal(Subset(2), 1, d), 0.0);
  EXPECT_DOUBLE_EQ(SumDiversityMarginal(Subset(2, {0}), 1, d), 1.7);
  EXPECT_THROW(SumDiversityMarginal(Subset(2, {0}), 0, d), std::invalid_argument);
}

TEST(SumDiversityTest, MatchesPairLoopAndIncrementalChain) {
  RngStream rng(21, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const DistanceMatrix d = RandomMetric(10, rng);
    const Subset x = RandomSubset(10, rng);
    const std::vector<ItemId> m = x.Members();
    double pairs = 0.0;
    for (size_t i = 0; i < m.size(); ++i) {
      for (size_t j = i + 1; j < m.size(); ++j) pairs += d(m[i], m[j]);
    }
    ASSERT_NEAR(SumDiversity(x, d), pairs, 1e-12);

    Subset built(10);
    double chained = 0.0;
    for (ItemId item : m) {
      const double gain = SumDiversityMarginal(built, item, d);
      Subset next = built;
      next.Insert(item);
      ASSERT_NEAR(gain, SumDiversity(next, d) - SumDiversity(built, d), 1e-9);
      chained += gain;
      built = next;
    }
    ASSERT_LE(std::abs(chained - pairs), 1e-9 * std::max(1.0, pairs));
  }
}

TEST(MinDiversityTest, ExamplesAndSentinel) {
  const DistanceMatrix d = Triangle();
  EXPECT_EQ(MinDiversity(Subset(3, {0, 1, 2}), d), ExtendedReal(1.0));
  EXPECT_TRUE(MinDiversity(Subset(3, {0}), d).is_infinite());
  EXPECT_TRUE(MinDiversity(Subset(3), d).is_infinite());
}

TEST(MinDiversityTest, MatchesPairMinimum) {
  RngStream rng(22, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const DistanceMatrix d = RandomMetric(9, rng);
    const Subset x = RandomSubset(9, rng);
    const auto m = x.Members();
    if (m.size() < 2) continue;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < m.size(); ++i) {
      for (size_t j = i + 1; j < m.size(); ++j) best = std::min(best, d(m[i], m[j]));
    }
    ASSERT_EQ(MinDiversity(x, d), ExtendedReal(best));
  }
}

TEST(MstDiversityTest, SmallExamples) {
  EXPECT_DOUBLE_EQ(MstDiversity(Subset(3, {0, 1, 2}), Triangle()), 2.5);
  const DistanceMatrix pair(2, Distances(2, {{{0, 1}, 1.3}}));
  EXPECT_DOUBLE_EQ(MstDiversity(Subset(2, {0, 1}), pair), 1.3);
  EXPECT_DOUBLE_EQ(MstDiversity(Subset(2, {1}), pair), 0.0);
}

// Minimum spanning tree weight by enumerating every labelled tree on the
// items through its Pruefer sequence.
double MinOverAllSpanningTrees(const std::vector<ItemId>& items,
                               const DistanceMatrix& d) {
  const int m = static_cast<int>(items.size());
  if (m <= 1) return 0.0;
  if (m == 2) return d(items[0], items[1]);
  std::vector<int> code(m - 2, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<int> degree(m, 1);
    for (int c : code) ++degree[c];
    double weight = 0.0;
    for (int c : code) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      weight += d(items[leaf], items[c]);
      --degree[leaf];
      --degree[c];
    }
    int u = -1;
    for (int i = 0; i < m; ++i) {
      if (degree[i] == 1) {
        if (u < 0) {
          u = i;
        } else {
          weight += d(items[u], items[i]);
          break;
        }
      }
    }
    best = std::min(best, weight);
    int pos = 0;
    while (pos < m - 2 && ++code[pos] == m) code[pos++] = 0;
    if (pos == m - 2) break;
  }
  return best;
}

TEST(MstDiversityTest, MatchesSpanningTreeEnumeration) {
  RngStream rng(23, 0);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 8;
    const DistanceMatrix d = trial % 2 == 0 ? RandomMetric(n, rng) : RandomPlanar(n, rng);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > 6) continue;
      Subset x(n);
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) x.Insert(i);
      }
      ASSERT_NEAR(MstDiversity(x, d), MinOverAllSpanningTrees(x.Members(), d), 1e-12)
          << x.ToString();
    }
  }
}

TEST(PermutationProxyTest, Examples) {
  const DistanceMatrix d = Triangle();
  const std::vector<ItemId> abc = {0, 1, 2};
  const std::vector<ItemId> cba = {2, 1, 0};
  EXPECT_DOUBLE_EQ(PermutationMstProxy(abc, d), 2.5);
  EXPECT_DOUBLE_EQ(PermutationMstProxy(cba, d), 3.0);
  const std::vector<ItemId> dup = {0, 0};
  EXPECT_THROW(PermutationMstProxy(dup, d), std::invalid_argument);
}

TEST(PermutationProxyTest, BoundedByMstAndLogTimesMst) {
  RngStream rng(24, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 7;
    const DistanceMatrix d = trial % 2 == 0 ? RandomMetric(n, rng) : RandomPlanar(n, rng);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > 6) continue;
      std::vector<ItemId> perm;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) perm.push_back(i);
      }
      const double mst = MstDiversity(std::span<const ItemId>(perm), d);
      const double bound = std::log2(static_cast<double>(perm.size())) * mst;
      do {
        const double proxy = PermutationMstProxy(perm, d);
        ASSERT_GE(proxy, mst - 1e-12);
        ASSERT_LE(proxy, bound + 1e-12);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(ObjectiveTest, ThreeItemExamples) {
  const Instance inst = ::divopt::testing::ThreeItemInstance();
  EXPECT_NEAR(Objective(Subset(3, {0, 2}), inst), 1.8, 1e-12);
  EXPECT_DOUBLE_EQ(Objective(Subset(3), inst), 0.0);
  const Instance plain = inst.WithLambda(0.0);
  EXPECT_DOUBLE_EQ(Objective(Subset(3, {0, 1, 2}), plain), 0.8);
}

TEST(ObjectiveTest, EvaluationChargesOneAndFlagsFeasibility) {
  const Instance inst =
      ::divopt::testing::ThreeItemInstance(CardinalityMode::kExact);
  EvaluationCounter counter;
  EXPECT_FALSE(EvaluateObjective(Subset(3, {0}), inst, &counter).feasible);
  EXPECT_TRUE(EvaluateObjective(Subset(3, {0, 1}), inst, &counter).feasible);
  EXPECT_EQ(counter.count(), 2);
  EXPECT_THROW(counter.Charge(-1), std::invalid_argument);
}

TEST(QualityTest, ModularValueAndMarginal) {
  const ModularQuality f({0.5, 0.2, 0.1});
  EXPECT_DOUBLE_EQ(f.Value(Subset(3)), 0.0);
  EXPECT_DOUBLE_EQ(f.Value(Subset(3, {0, 2})), 0.6);
  EXPECT_DOUBLE_EQ(f.Marginal(Subset(3, {0}), 1), 0.2);
  EXPECT_THROW(ModularQuality({0.1, -0.2}), DataError);
}

TEST(QualityTest, TopPSumsLargestPerLabel) {
  const TopPMIQuality f({{0.9, 0.1}, {0.5, 0.6}, {0.7, 0.2}}, 2);
  EXPECT_DOUBLE_EQ(f.Value(Subset(3)), 0.0);
  EXPECT_DOUBLE_EQ(f.Value(Subset(3, {1})), 1.1);
  EXPECT_DOUBLE_EQ(f.Value(Subset(3, {0, 1, 2})), (0.9 + 0.7) + (0.6 + 0.2));
  EXPECT_THROW(TopPMIQuality({{0.1}}, 0), DataError);
}

// f(X) = |X|^2, supermodular.
class SquareOfSize : public QualityOracle {
 public:
  explicit SquareOfSize(int n) : n_(n) {}
  int size() const override { return n_; }
  double Value(const Subset& x) const override {
    return static_cast<double>(x.size()) * x.size();
  }
  Json ToJson() const override { return Json::object(); }

 private:
  int n_;
};

TopPMIQuality RandomTopP(int n, int labels, int p, RngStream& rng) {
  std::vector<std::vector<double>> mi(n, std::vector<double>(labels));
  for (auto& row : mi) {
    for (double& v : row) v = rng.Uniform(0, 1);
  }
  return TopPMIQuality(std::move(mi), p);
}

TEST(SetFunctionCheckTest, ModularAndTopPAreMonotoneSubmodular) {
  RngStream rng(25, 0);
  std::vector<double> w(10);
  for (double& x : w) x = rng.Uniform(0, 1);
  const ModularQuality modular(w);
  const TopPMIQuality top_p = RandomTopP(10, 3, 2, rng);
  for (const QualityOracle* f : {static_cast<const QualityOracle*>(&modular),
                                 static_cast<const QualityOracle*>(&top_p)}) {
    const SetFunctionReport exhaustive = CheckSubmodular(*f, 0, rng);
    EXPECT_GT(exhaustive.checks, 0);
    EXPECT_EQ(exhaustive.violations, 0);
    EXPECT_EQ(CheckSubmodular(*f, 1000, rng).violations, 0);
    EXPECT_EQ(CheckMonotone(*f, 0, rng).violations, 0);
    EXPECT_EQ(CheckMonotone(*f, 1000, rng).violations, 0);
  }
}

TEST(SetFunctionCheckTest, SupermodularOracleIsCaught) {
  RngStream rng(26, 0);
  const SquareOfSize f(6);
  const SetFunctionReport report = CheckSubmodular(f, 0, rng);
  EXPECT_GT(report.violations, 0);
  EXPECT_DOUBLE_EQ(report.worst_violation, 2.0 * 5);
  EXPECT_GT(CheckSubmodular(f, 500, rng).violations, 0);
}

TEST(MutualInformationTest, IdenticalColumnsAndIndependence) {
  const DiscreteColumn label = {0, 1, 0, 1, 2, 2};
  const DiscreteColumn a = {0, 0, 1, 1};
  const DiscreteColumn b = {0, 1, 0, 1};
  const FeatureLabelStatistics same = NormalizedMIFromData({label, label}, {label});
  EXPECT_NEAR(same.mi[0][0], 1.0, 1e-12);
  EXPECT_NEAR(same.feature_distance(0, 1), 0.0, 1e-12);

  EXPECT_NEAR(MutualInformation(a, b), 0.0, 1e-12);
  EXPECT_NEAR(JointEntropy(a, b), 2 * std::log(2.0), 1e-12);
  const FeatureLabelStatistics indep = NormalizedMIFromData({a, b}, {a});
  EXPECT_NEAR(indep.feature_distance(0, 1), 1.0, 1e-12);
  EXPECT_NEAR(indep.mi[1][0], 0.0, 1e-12);
}

TEST(MutualInformationTest, ConstantColumnsAndErrors) {
  const DiscreteColumn constant = {3, 3, 3};
  const DiscreteColumn varied = {0, 1, 1};
  const FeatureLabelStatistics stats =
      NormalizedMIFromData({constant, varied}, {varied});
  EXPECT_DOUBLE_EQ(stats.mi[0][0], 0.0);
  EXPECT_THROW(NormalizedMIFromData({constant}, {DiscreteColumn{1, 2}}), DataError);
}

TEST(MutualInformationTest, FeatureDistanceIsMetricOnRandomData) {
  RngStream rng(27, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 5 + rng.UniformInt(40);
    std::vector<DiscreteColumn> features(6, DiscreteColumn(m));
    for (auto& column : features) {
      const int arity = 1 + rng.UniformInt(4);
      for (auto& v : column) v = rng.UniformInt(arity);
    }
    // Correlated copies make small distances likely.
    features[5] = features[4];
    for (int i = 0; i < m / 4; ++i) features[5][rng.UniformInt(m)] ^= 1;
    const FeatureLabelStatistics stats = NormalizedMIFromData(features, {features[0]});
    ASSERT_TRUE(stats.feature_distance.is_metric()) << "trial " << trial;
    for (const auto& row : stats.mi) {
      for (double v : row) {
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, 1.0);
      }
    }
  }
}

TEST(MutualInformationTest, ReadsTablesWithOptionalHeader) {
  const auto path = std::filesystem::temp_directory_path() / "divopt_table.csv";
  {
    std::ofstream out(path);
    out << "f0,f1\n1,2\n3;4\n5\t6\n";
  }
  const auto columns = ReadDiscreteTable(path);
  ASSERT_EQ(columns.size(), 2u);
  EXPECT_EQ(columns[0], (DiscreteColumn{1, 3, 5}));
  EXPECT_EQ(columns[1], (DiscreteColumn{2, 4, 6}));
  {
    std::ofstream out(path);
    out << "1 2\n3\n";
  }
  EXPECT_THROW(ReadDiscreteTable(path), DataError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace divopt
