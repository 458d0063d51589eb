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

// Oracle ratio suite: runs each algorithm with a known approximation
// guarantee on small instances and compares against brute-force OPT.

#ifndef DIVOPT_VERIFY_H_
#define DIVOPT_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divopt/bench.h"

namespace divopt {

inline constexpr double kMatroidEpsilon = 0.1;

// Guaranteed ratio of `algorithm` on `instance`, if it has one:
//   greedy, gsemo (sum, cardinality)  1 / (2 max(1, alpha))
//   gsemo (min)                       1/4
//   gsemo (mst)                       (1 - 1/e) / (2 log2 k), k >= 2
//   gsemo (partition matroid)         1/2 - epsilon / (4 n)
std::optional<double> GuaranteedRatio(const std::string& algorithm,
                                      const Instance& instance);

struct VerifyRow {
  std::string instance_id;
  std::string algorithm;
  double objective = 0.0;
  double opt = 0.0;
  double ratio = 0.0;
  double achieved = 0.0;
  bool pass = false;
};

// Every algorithm with a guarantee on each instance. Throws
// std::invalid_argument for instances above the brute-force guard.
std::vector<VerifyRow> VerifyInstances(const std::vector<NamedInstance>& instances,
                                       uint64_t seed);

// A fixed suite of small instances covering every guarantee above.
std::vector<NamedInstance> BundledVerifyInstances(uint64_t seed);

}  // namespace divopt

#endif  // DIVOPT_VERIFY_H_
