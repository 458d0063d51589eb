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

// Summary statistics and Wilcoxon tests for comparing algorithms over trials.

#ifndef DIVOPT_STATS_H_
#define DIVOPT_STATS_H_

#include <span>

namespace divopt {

struct StatsSummary {
  int count = 0;
  double mean = 0.0;
  // Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
  double std_dev = 0.0;
};

StatsSummary Summarize(std::span<const double> values);

struct TestResult {
  // False when there is too little data for a p-value.
  bool conclusive = false;
  double statistic = 0.0;
  double p_two_sided = 1.0;
};

// Paired two-sided signed-rank test. Zero differences are dropped; absolute
// differences get midranks; the statistic is the smaller signed-rank sum. The
// p-value uses the normal approximation with tie and continuity corrections.
// Inconclusive below 5 nonzero differences. Throws std::invalid_argument for
// unequal lengths.
TestResult WilcoxonSignedRank(std::span<const double> a,
                              std::span<const double> b);

// Two-sided rank-sum (Mann-Whitney) test. The statistic is U for `a`; the
// p-value uses the normal approximation with tie and continuity corrections.
// Throws std::invalid_argument if either sample is empty.
TestResult WilcoxonRankSum(std::span<const double> a,
                           std::span<const double> b);

}  // namespace divopt

#endif  // DIVOPT_STATS_H_
