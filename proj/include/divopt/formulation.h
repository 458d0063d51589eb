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
// Bi-objective reformulations (f1, f2) of the diversification problem. The
// GSEMO maximizes both objectives; each formulation also fixes which offspring
// are admitted and how the final single solution is read off a population.
//

#ifndef DIVOPT_FORMULATION_H_
#define DIVOPT_FORMULATION_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "divopt/extended_real.h"
#include "divopt/instance.h"
#include "divopt/objective.h"
#include "divopt/subset.h"

namespace divopt {

enum class Formulation {
  // f1 = (1 + |x|/k) f(x) / 2 + lambda div(x),  f2 = -|x|.
  kScaledCardinalitySum,
  // f1 = f(x) + lambda div(x),                  f2 = -|x|.
  kPlainCardinalitySum,
  // f1 = f(x),                                  f2 = -|x|.
  kMinQualityPhase,
  // f1 = min-div(x) (+inf for |x| <= 1),        f2 = |x|.
  kMinDiversityPhase,
  // f1 = f(x) + lambda proxy(perm),             f2 = -|x|.
  kMstPermutation,
  // f1 = f(x) + lambda sum-div(x),              f2 = |x|.
  kMatroidSum,
};

std::string_view FormulationName(Formulation form);
// Accepts the names produced by FormulationName; throws std::invalid_argument.
Formulation ParseFormulation(std::string_view name);

struct BiObjectiveValue {
  ExtendedReal f1;
  double f2 = 0.0;
};

struct Dominance {
  bool weak = false;
  bool strict = false;
  bool incomparable = false;
};

// Relation of a to b: weak iff a.f1 >= b.f1 and a.f2 >= b.f2.
Dominance Dominates(const BiObjectiveValue& a, const BiObjectiveValue& b);

struct Individual {
  Subset subset;
  BiObjectiveValue value;
  // Item order for kMstPermutation; absent otherwise.
  std::optional<std::vector<ItemId>> perm;
};

// Charges one evaluation when `counter` is non-null. Throws
// std::invalid_argument when kMstPermutation is given no permutation.
//
// The diversity term of kScaledCardinalitySum, kPlainCardinalitySum and
// kMatroidSum is the instance's own diversity measure; on sum instances this
// is sum-diversity. Sets of fewer than two items get a zero min-diversity term
// in kPlainCardinalitySum.
BiObjectiveValue Evaluate(Formulation form, const Subset& x,
                          const std::vector<ItemId>* perm,
                          const Instance& instance,
                          EvaluationCounter* counter = nullptr);

// Cardinality formulations admit |x| <= k; kMatroidSum admits independent x.
bool OffspringFeasible(Formulation form, const Subset& x,
                       const Instance& instance);

// The permutation of an offspring: survivors keep their relative order,
// removed items are dropped, and new items are appended in ascending index.
std::vector<ItemId> MutatePermutation(std::span<const ItemId> parent_perm,
                                      const Subset& offspring);

struct FinalSolution {
  Subset subset;
  std::vector<ItemId> perm;
  // f(x) + lambda div(x) under the instance's diversity measure.
  double objective = 0.0;
  // IsFeasibleFinal(subset, constraint).
  bool feasible = false;
};

// Reads the single answer off a GSEMO population.
//   kScaled/kPlain: argmax objective over final-feasible members (over members
//     with |x| <= k, flagged infeasible, if none is final-feasible).
//   kMinQualityPhase: largest member padded to k with the lowest-index
//     unselected items.
//   kMinDiversityPhase: the size-k member; the largest member, flagged, if
//     none has size k.
//   kMstPermutation: largest member padded to k, the padding appended to its
//     permutation.
//   kMatroidSum: argmax objective over independent members.
// Ties go to the earliest member. Does not charge evaluations. Throws
// std::invalid_argument on an empty population.
FinalSolution ExtractFinal(Formulation form,
                           std::span<const Individual> population,
                           const Instance& instance);

}  // namespace divopt

#endif  // DIVOPT_FORMULATION_H_
