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
#include <bit>
#include <stdexcept>
#include <vector>

#include "divopt/constraint.h"
#include "divopt/errors.h"
#include "divopt/rng.h"
#include "gtest/gtest.h"

namespace divopt {
namespace {

Subset FromMask(int n, uint32_t mask) {
  Subset x(n);
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1u) x.Insert(i);
  }
  return x;
}

PartitionConstraint TwoByTwo() { return PartitionConstraint(4, {{0, 1}, {2, 3}}, {1, 1}); }

TEST(IndependenceTest, Examples) {
  EXPECT_TRUE(IsIndependent(Subset(4), TwoByTwo()));
  EXPECT_TRUE(IsIndependent(Subset(4), UniformConstraint{0, CardinalityMode::kExact}));
  EXPECT_FALSE(IsIndependent(Subset(4, {0, 1}), TwoByTwo()));
  EXPECT_TRUE(IsIndependent(Subset(4, {0, 1, 2}), UniformConstraint{3}));
}

TEST(IndependenceTest, ExactModeFinalFeasibilityNeedsSizeK) {
  const ConstraintSpec exact = UniformConstraint{2, CardinalityMode::kExact};
  EXPECT_TRUE(IsIndependent(Subset(4, {1}), exact));
  EXPECT_FALSE(IsFeasibleFinal(Subset(4, {1}), exact));
  EXPECT_TRUE(IsFeasibleFinal(Subset(4, {1, 3}), exact));
  EXPECT_TRUE(IsFeasibleFinal(Subset(4, {1}), UniformConstraint{2}));
}

TEST(RankTest, Examples) {
  EXPECT_EQ(Rank(UniformConstraint{5}), 5);
  EXPECT_EQ(Rank(PartitionConstraint(6, {{0, 1, 2, 3}, {4, 5}}, {2, 3})), 4);
  EXPECT_EQ(Rank(PartitionConstraint(2, {{0, 1}, {}}, {1, 7})), 1);
}

TEST(PartitionConstraintTest, RejectsBadPartitions) {
  EXPECT_THROW(PartitionConstraint(3, {{0, 1}, {1, 2}}, {1, 1}), DataError);
  EXPECT_THROW(PartitionConstraint(3, {{0, 1}}, {1}), DataError);
  EXPECT_THROW(PartitionConstraint(2, {{0, 1}}, {-1}), DataError);
  EXPECT_THROW(PartitionConstraint(2, {{0, 1}}, {1, 1}), DataError);
}

TEST(ExtendToBasisTest, Examples) {
  EXPECT_EQ(ExtendToBasis(Subset(3), UniformConstraint{2}), Subset(3, {0, 1}));
  EXPECT_EQ(ExtendToBasis(Subset(3, {0, 2}), UniformConstraint{2}), Subset(3, {0, 2}));
  const PartitionConstraint c(3, {{0, 1}, {2}}, {1, 1});
  EXPECT_EQ(ExtendToBasis(Subset(3, {1}), c), Subset(3, {1, 2}));
  const std::vector<ItemId> order = {2, 1, 0};
  EXPECT_EQ(ExtendToBasis(Subset(3), UniformConstraint{2}, order), Subset(3, {1, 2}));
  EXPECT_THROW(ExtendToBasis(Subset(4, {0, 1}), TwoByTwo()), std::invalid_argument);
}

TEST(FeasibleSwapsTest, Examples) {
  EXPECT_EQ(FeasibleSwaps(Subset(3, {0, 1}), UniformConstraint{2}),
            (std::vector<Swap>{{0, 2}, {1, 2}}));
  EXPECT_EQ(FeasibleSwaps(Subset(4, {0, 2}), TwoByTwo()),
            (std::vector<Swap>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(FeasibleSwaps(Subset(3, {0, 1, 2}), UniformConstraint{3}).empty());
  EXPECT_THROW(FeasibleSwaps(Subset(4, {0}), TwoByTwo()), std::invalid_argument);
}

// Random partition matroids and uniform matroids on up to ten items.
std::vector<ConstraintSpec> SmallMatroids() {
  std::vector<ConstraintSpec> out;
  RngStream rng(31, 0);
  for (int n = 1; n <= 10; ++n) {
    out.push_back(UniformConstraint{rng.UniformInt(n + 1)});
    const int num_parts = 1 + rng.UniformInt(std::min(n, 4));
    std::vector<std::vector<ItemId>> parts(num_parts);
    for (int i = 0; i < n; ++i) parts[rng.UniformInt(num_parts)].push_back(i);
    std::vector<int> caps(num_parts);
    for (int& c : caps) c = rng.UniformInt(4);
    out.push_back(PartitionConstraint(n, std::move(parts), std::move(caps)));
  }
  return out;
}

int UniverseSize(const ConstraintSpec& c) {
  if (const auto* p = std::get_if<PartitionConstraint>(&c)) return p->universe_size();
  return 10;
}

TEST(MatroidAxiomsTest, ExhaustiveOnSmallGroundSets) {
  for (const ConstraintSpec& c : SmallMatroids()) {
    const int n = UniverseSize(c);
    const uint32_t limit = 1u << n;
    std::vector<bool> independent(limit);
    int max_size = 0;
    for (uint32_t m = 0; m < limit; ++m) {
      independent[m] = IsIndependent(FromMask(n, m), c);
      if (independent[m]) max_size = std::max(max_size, std::popcount(m));
    }
    ASSERT_TRUE(independent[0]);
    EXPECT_EQ(Rank(c), max_size);
    for (uint32_t x = 0; x < limit; ++x) {
      if (!independent[x]) continue;
      // Hereditary: every subset of an independent set is independent.
      for (uint32_t y = x; y != 0; y = (y - 1) & x) ASSERT_TRUE(independent[y]);
      // Augmentation against every smaller independent set.
      for (uint32_t y = 0; y < limit; ++y) {
        if (!independent[y] || std::popcount(y) >= std::popcount(x)) continue;
        bool augmentable = false;
        for (uint32_t rest = x & ~y; rest != 0; rest &= rest - 1) {
          if (independent[y | (rest & (~rest + 1))]) {
            augmentable = true;
            break;
          }
        }
        ASSERT_TRUE(augmentable) << "x=" << x << " y=" << y;
      }
      const Subset basis = ExtendToBasis(FromMask(n, x), c);
      ASSERT_EQ(basis.size(), Rank(c));
      ASSERT_TRUE(IsBasis(basis, c));
    }
  }
}

TEST(MatroidAxiomsTest, SwapListIsExactlyTheIndependentExchanges) {
  for (const ConstraintSpec& c : SmallMatroids()) {
    const int n = UniverseSize(c);
    for (uint32_t m = 0; m < (1u << n); ++m) {
      const Subset x = FromMask(n, m);
      if (!IsBasis(x, c)) continue;
      std::vector<Swap> expected;
      x.ForEachMember([&](ItemId out) {
        x.ForEachNonMember([&](ItemId in) {
          Subset y = x;
          y.Remove(out);
          y.Insert(in);
          if (IsIndependent(y, c)) expected.push_back({out, in});
        });
      });
      ASSERT_EQ(FeasibleSwaps(x, c), expected) << x.ToString();
    }
  }
}

}  // namespace
}  // namespace divopt
