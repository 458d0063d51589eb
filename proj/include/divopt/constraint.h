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

//
// Matroid feasibility oracles. Algorithms only talk to the free functions
// below, so adding a matroid type means extending the variant and these
// functions.
//

#ifndef DIVOPT_CONSTRAINT_H_
#define DIVOPT_CONSTRAINT_H_

#include <utility>
#include <variant>
#include <vector>

#include "divopt/subset.h"

namespace divopt {

enum class CardinalityMode { kAtMost, kExact };

// Uniform matroid {X : |X| <= k}. In kExact mode the original problem also
// requires |X| = k at the end (see IsFeasibleFinal); independence is still
// |X| <= k.
struct UniformConstraint {
  int k = 0;
  CardinalityMode mode = CardinalityMode::kAtMost;
};

// Partition matroid {X : |X ∩ parts[i]| <= caps[i] for all i}.
class PartitionConstraint {
 public:
  // Parts must be disjoint and cover {0, ..., n-1}; caps nonnegative.
  // Throws DataError otherwise.
  PartitionConstraint(int n, std::vector<std::vector<ItemId>> parts,
                      std::vector<int> caps);

  int universe_size() const { return static_cast<int>(part_of_.size()); }
  const std::vector<std::vector<ItemId>>& parts() const { return parts_; }
  const std::vector<int>& caps() const { return caps_; }
  int part_of(ItemId item) const { return part_of_[item]; }

  // Per-part member counts of x.
  std::vector<int> Counts(const Subset& x) const;

 private:
  std::vector<std::vector<ItemId>> parts_;
  std::vector<int> caps_;
  std::vector<int> part_of_;
};

using ConstraintSpec = std::variant<UniformConstraint, PartitionConstraint>;

// Item exchange: remove `out` (a member), insert `in` (a non-member).
struct Swap {
  ItemId out;
  ItemId in;
  friend bool operator==(const Swap&, const Swap&) = default;
};

bool IsIndependent(const Subset& x, const ConstraintSpec& c);

// Independent and, for exact-cardinality mode, of size exactly k.
bool IsFeasibleFinal(const Subset& x, const ConstraintSpec& c);

// Rank of the matroid: k for uniform, sum of min(|part|, cap) for partition.
int Rank(const ConstraintSpec& c);

// Grows x by scanning `order` and adding every item that keeps x independent.
// Empty `order` means ascending index. Throws std::invalid_argument if x is
// not independent.
Subset ExtendToBasis(const Subset& x, const ConstraintSpec& c,
                     const std::vector<ItemId>& order = {});

bool IsBasis(const Subset& x, const ConstraintSpec& c);

// All exchanges (out in x, in not in x) that keep the basis x independent, in
// ascending (out, in) order. Throws std::invalid_argument if x is not a basis.
std::vector<Swap> FeasibleSwaps(const Subset& x, const ConstraintSpec& c);

// Whether x - {out} + {in} is independent, for x independent.
bool SwapKeepsIndependent(const Subset& x, ItemId out, ItemId in,
                          const ConstraintSpec& c);

}  // namespace divopt

#endif  // DIVOPT_CONSTRAINT_H_
