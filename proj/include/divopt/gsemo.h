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
// GSEMO: global simple evolutionary multi-objective optimizer.
//
// The population holds mutually incomparable solutions (at most one per
// subset size). Each iteration picks a parent uniformly at random, flips each
// of its n bits independently with probability 1/n, and offers the offspring
// to the population: it is rejected if some member strictly dominates it,
// otherwise it replaces every member it weakly dominates. Offspring that the
// formulation does not admit are dropped without touching the population.
// Every iteration costs one evaluation, admitted or not.
//

#ifndef DIVOPT_GSEMO_H_
#define DIVOPT_GSEMO_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "divopt/formulation.h"
#include "divopt/instance.h"
#include "divopt/rng.h"
#include "divopt/run.h"

namespace divopt {

class Population {
 public:
  explicit Population(Individual seed);

  // Applies the update rule; returns whether `offspring` was inserted.
  bool Offer(Individual offspring);

  // Members in ascending subset size.
  std::span<const Individual> members() const { return members_; }
  size_t size() const { return members_.size(); }

  // Throws std::logic_error if members are not mutually incomparable, two
  // share a size, or one is not admitted by the formulation.
  void CheckInvariants(Formulation form, const Instance& instance) const;

 private:
  std::vector<Individual> members_;
};

struct GsemoConfig {
  Formulation formulation = Formulation::kScaledCardinalitySum;
  Budget budget = Budget::Iterations(0);
  RngStream rng{0, 0};
  // Record a trace point every this many evaluations; 0 records only the end.
  int64_t trace_stride = 0;
  // Seed the population with this solution instead of the empty set.
  std::optional<Subset> warm_start;
  // Item order of the warm start under kMstPermutation; ascending if absent.
  std::optional<std::vector<ItemId>> warm_perm;
  // Verify the population invariants after every iteration.
  bool check_invariants = false;
};

// The final answer is ExtractFinal of the last population. Trace values are
// the best final-feasible ExtractFinal objective seen at each trace point.
//
// Throws std::invalid_argument on a malformed budget, a warm start the
// formulation does not admit, or a formulation that does not fit the
// instance's diversity measure.
RunResult Gsemo(const Instance& instance, const GsemoConfig& config);

// Same run, also returning the final population.
RunResult Gsemo(const Instance& instance, const GsemoConfig& config,
                std::vector<Individual>* final_population);

// ceil(e * n * k^3 / 2).
int64_t DefaultGsemoIterations(int n, int k);
// ceil(e * n * k * (k + 1)).
int64_t DefaultQualityPhaseIterations(int n, int k);
// ceil(e * n * k^2).
int64_t DefaultDiversityPhaseIterations(int n, int k);

// Min-diversity pipeline: GSEMO on the quality phase for `quality_iterations`
// and on the diversity phase for `diversity_iterations`, on independent
// streams forked from `rng`; returns the better final solution under
// f + lambda * min-div, preferring final-feasible ones and the quality phase
// on ties.
RunResult GsemoMinPipeline(const Instance& instance,
                           int64_t quality_iterations,
                           int64_t diversity_iterations, const RngStream& rng,
                           int64_t trace_stride = 0);

}  // namespace divopt

#endif  // DIVOPT_GSEMO_H_
