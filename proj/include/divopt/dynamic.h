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
// Dynamic environments: the objective changes by random relevance and
// distance resets, and algorithms re-optimize from their previous solution
// under a fixed evaluation budget per change.
//

#ifndef DIVOPT_DYNAMIC_H_
#define DIVOPT_DYNAMIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "divopt/formulation.h"
#include "divopt/instance.h"
#include "divopt/rng.h"

namespace divopt {

// Sets the weight of `item` to `weight` in [0, 1].
struct RelevanceReset {
  ItemId item;
  double weight;
};

// Sets d(u, v) = d(v, u) = `distance` in [1, 2].
struct DistanceReset {
  ItemId u;
  ItemId v;
  double distance;
};

using Perturbation = std::variant<RelevanceReset, DistanceReset>;
using ChangeBatch = std::vector<Perturbation>;

// m independent perturbations: each is a relevance reset or a distance reset
// with probability 1/2, on a uniform item or unordered pair, with a uniform
// new value. Throws DataError unless the instance has modular quality and all
// off-diagonal distances in [1, 2]; std::invalid_argument if m < 1.
ChangeBatch SampleChange(RngStream& rng, const Instance& instance, int m);

// A new instance with the batch applied in order; `instance` is unchanged.
Instance ApplyChange(const Instance& instance, const ChangeBatch& batch);

// One competitor in a dynamic run.
struct DynamicAlgorithm {
  enum class Kind { kGsemo, kLocalSearch };
  Kind kind = Kind::kGsemo;
  std::string name;
  // GSEMO settings.
  Formulation formulation = Formulation::kMatroidSum;
  // Local search settings.
  int max_swaps = 1;
  double epsilon = 0.0;
};

struct DynamicSchedule {
  std::vector<ChangeBatch> changes;
  // Evaluations each algorithm may spend after each change.
  int64_t evaluations_per_change = 1;
};

struct DynamicRecord {
  int change_index = 0;
  std::string algorithm;
  double objective = 0.0;
  int64_t evaluations = 0;
  Subset solution;
};

struct DynamicOutcome {
  std::vector<DynamicRecord> records;
  // Instance after each change, index-aligned with the changes.
  std::vector<Instance> instances;
  // Each algorithm's solution after the last change (or `initial`).
  std::vector<Subset> final_solutions;
};

// For every change: apply it, then let each algorithm warm-start from its own
// previous solution (the first change from `initial`) and spend the per-change
// budget. The GSEMO population is seeded with the previous solution only.
// Records the objective under the new instance.
//
// Throws std::invalid_argument if `initial` is not independent or the budget
// is below one evaluation.
DynamicOutcome RunDynamic(const Instance& initial_instance,
                          const DynamicSchedule& schedule,
                          const std::vector<DynamicAlgorithm>& algorithms,
                          const Subset& initial, const RngStream& rng);

}  // namespace divopt

#endif  // DIVOPT_DYNAMIC_H_
