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

#ifndef DIVOPT_LOCAL_SEARCH_H_
#define DIVOPT_LOCAL_SEARCH_H_

#include <cstdint>
#include <optional>

#include "divopt/instance.h"
#include "divopt/run.h"

namespace divopt {

struct LocalSearchOptions {
  // Absent: start from the best independent pair, extended to a basis in
  // ascending index order. Present: extend this independent set to a basis.
  std::optional<Subset> warm_start;
  // A move is taken only if it beats the current objective by a factor
  // (1 + epsilon), with an extra 1e-12 relative margin against round-off.
  double epsilon = 0.0;
  // 1: single exchanges. 2: single and double exchanges.
  int max_swaps = 1;
  // Stop after this many evaluations; absent runs to a local optimum.
  std::optional<int64_t> max_evaluations;
};

// Best-improvement local search over bases of the instance's matroid for
// sum-diversity. Each neighbor scanned costs one evaluation; a sweep cut
// short by the budget still applies the best improving neighbor it found.
// The trace has one point per sweep.
//
// Throws std::invalid_argument for non-sum instances, max_swaps outside
// {1, 2}, a negative budget or epsilon, or a dependent warm start.
RunResult LocalSearch(const Instance& instance,
                      const LocalSearchOptions& options = {});

}  // namespace divopt

#endif  // DIVOPT_LOCAL_SEARCH_H_
