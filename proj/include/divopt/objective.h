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

#ifndef DIVOPT_OBJECTIVE_H_
#define DIVOPT_OBJECTIVE_H_

#include <cstdint>
#include <stdexcept>

#include "divopt/instance.h"
#include "divopt/subset.h"

namespace divopt {

// Objective evaluations consumed by one run. Cost model:
//   one combined objective call        = 1
//   one GSEMO iteration                = 1
//   a greedy step over c candidates    = c
//   a local-search sweep               = neighborhood size
class EvaluationCounter {
 public:
  int64_t count() const { return count_; }
  void Charge(int64_t evaluations = 1) {
    if (evaluations < 0) throw std::invalid_argument("negative charge");
    count_ += evaluations;
  }

 private:
  int64_t count_ = 0;
};

struct ObjectiveValue {
  double value = 0.0;
  // IsFeasibleFinal(x, constraint).
  bool feasible = true;
};

// f(x) + lambda * div(x) under the instance's diversity kind. Min-diversity of
// a set with fewer than two items (only possible for infeasible sets, since
// k >= 2) contributes 0 instead of +infinity. Charges 1 evaluation when a
// counter is given.
ObjectiveValue EvaluateObjective(const Subset& x, const Instance& instance,
                                 EvaluationCounter* counter = nullptr);

// Same value, no bookkeeping.
double Objective(const Subset& x, const Instance& instance);

// Diversity term alone, with the same small-set convention.
double DiversityTerm(const Subset& x, const Instance& instance);

}  // namespace divopt

#endif  // DIVOPT_OBJECTIVE_H_
