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

#ifndef DIVOPT_RUN_H_
#define DIVOPT_RUN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "divopt/subset.h"

namespace divopt {

struct TracePoint {
  int64_t evaluations = 0;
  // Best objective seen up to this point.
  double best_objective = 0.0;
  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct RunResult {
  Subset best;
  // Item order, for the mst-permutation formulation only.
  std::vector<ItemId> perm;
  double objective = 0.0;
  bool feasible = true;
  int64_t evaluations = 0;
  // Nondecreasing in both coordinates.
  std::vector<TracePoint> trace;
};

// Budget for iterative algorithms. Exactly one of the two limits is set; for
// the GSEMO they coincide, since each iteration costs one evaluation.
struct Budget {
  std::optional<int64_t> iterations;
  std::optional<int64_t> evaluations;

  static Budget Iterations(int64_t n) { return {n, std::nullopt}; }
  static Budget Evaluations(int64_t n) { return {std::nullopt, n}; }

  // Throws std::invalid_argument unless exactly one limit is set and it is
  // nonnegative.
  void Validate() const;
  int64_t limit() const { return iterations ? *iterations : *evaluations; }
};

}  // namespace divopt

#endif  // DIVOPT_RUN_H_
