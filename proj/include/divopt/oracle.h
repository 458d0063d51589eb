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
// Exact ground truth for small instances, and checkers that turn
// approximation guarantees and set-function properties into testable reports.
//

#ifndef DIVOPT_ORACLE_H_
#define DIVOPT_ORACLE_H_

#include <cstdint>

#include "divopt/instance.h"
#include "divopt/quality.h"
#include "divopt/rng.h"

namespace divopt {

inline constexpr int kBruteForceMaxItems = 20;

struct OptResult {
  double opt_value = 0.0;
  Subset opt_subset;
  // Number of feasible subsets enumerated.
  int64_t enumerated = 0;
};

// Exact maximum of f + lambda * div over the final-feasible family (size-k
// sets for exact cardinality, |X| <= k for at-most, independent sets for a
// partition matroid). Among optimal sets the first in enumeration order
// (ascending size, then ascending bitmask) is returned. Throws
// std::invalid_argument for n > kBruteForceMaxItems.
OptResult BruteForceOpt(const Instance& instance);

struct RatioCheck {
  bool pass = false;
  // objective / OPT, or 1 when OPT = 0.
  double achieved = 1.0;
};

// pass iff achieved >= ratio - 1e-9.
RatioCheck VerifyRatio(double objective, double opt_value, double ratio);
RatioCheck VerifyRatio(double objective, const Instance& instance,
                       double ratio);

struct SetFunctionReport {
  int64_t checks = 0;
  int64_t violations = 0;
  double worst_violation = 0.0;
};

// Diminishing returns f(X+v) - f(X) >= f(Y+v) - f(Y) for X ⊆ Y, v ∉ Y, with
// 1e-12 slack. trials == 0 checks every triple (n <= 16); otherwise samples
// `trials` random triples.
SetFunctionReport CheckSubmodular(const QualityOracle& f, int64_t trials,
                                  RngStream& rng);

// f(X+v) >= f(X) - 1e-12, on `trials` random (X, v) pairs, or on all pairs
// when trials == 0 (n <= 16).
SetFunctionReport CheckMonotone(const QualityOracle& f, int64_t trials,
                                RngStream& rng);

// Instance on which the GSEMO maximizing f + lambda * min-div alongside -|x|
// can get stuck: modular f with weight 1 on the first n/2 items and 0 on the
// rest, item 0 at distance n/9 from everything, all other distances 1,
// lambda = 1, k = n/2 exactly. Throws std::invalid_argument unless 18 | n.
Instance HardMinInstance(int n);

}  // namespace divopt

#endif  // DIVOPT_ORACLE_H_
