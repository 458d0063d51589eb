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

#include "divopt/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace divopt {

namespace {

double NormalTwoSided(double z) {
  return std::clamp(std::erfc(std::abs(z) / std::sqrt(2.0)), 0.0, 1.0);
}

// Midranks (1-based) of `values`, plus sum over tie groups of t^3 - t.
std::vector<double> MidRanks(const std::vector<double>& values,
                             double* tie_term) {
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(n);
  *tie_term = 0.0;
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + j) / 2.0 + 1.0;
    for (size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    const double t = static_cast<double>(j - i + 1);
    *tie_term += t * t * t - t;
    i = j + 1;
  }
  return ranks;
}

// Two-sided p for a statistic with the given mean and variance.
double ContinuityCorrectedP(double statistic, double mean, double variance) {
  if (variance <= 0.0) return 1.0;
  const double deviation = std::max(0.0, std::abs(statistic - mean) - 0.5);
  return NormalTwoSided(deviation / std::sqrt(variance));
}

}  // namespace

StatsSummary Summarize(std::span<const double> values) {
  StatsSummary s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / s.count;
  if (s.count > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(sq / (s.count - 1));
  }
  return s;
}

TestResult WilcoxonSignedRank(std::span<const double> a,
                              std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("WilcoxonSignedRank: unequal lengths");
  }
  std::vector<double> diffs;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) diffs.push_back(a[i] - b[i]);
  }
  TestResult result;
  if (diffs.size() < 5) return result;
  std::vector<double> magnitudes(diffs.size());
  std::transform(diffs.begin(), diffs.end(), magnitudes.begin(),
                 [](double d) { return std::abs(d); });
  double tie_term = 0.0;
  const std::vector<double> ranks = MidRanks(magnitudes, &tie_term);
  double positive = 0.0;
  double negative = 0.0;
  for (size_t i = 0; i < diffs.size(); ++i) {
    (diffs[i] > 0 ? positive : negative) += ranks[i];
  }
  const double n = static_cast<double>(diffs.size());
  const double mean = n * (n + 1) / 4.0;
  const double variance = n * (n + 1) * (2 * n + 1) / 24.0 - tie_term / 48.0;
  result.conclusive = true;
  result.statistic = std::min(positive, negative);
  result.p_two_sided = ContinuityCorrectedP(result.statistic, mean, variance);
  return result;
}

TestResult WilcoxonRankSum(std::span<const double> a,
                           std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("WilcoxonRankSum: empty sample");
  }
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  double tie_term = 0.0;
  const std::vector<double> ranks = MidRanks(pooled, &tie_term);
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double rank_sum_a =
      std::accumulate(ranks.begin(), ranks.begin() + a.size(), 0.0);
  const double total = n1 + n2;
  const double mean = n1 * n2 / 2.0;
  const double tie_share = total > 1 ? tie_term / (total * (total - 1)) : 0.0;
  const double variance = n1 * n2 / 12.0 * ((total + 1) - tie_share);
  TestResult result;
  result.conclusive = true;
  result.statistic = rank_sum_a - n1 * (n1 + 1) / 2.0;
  result.p_two_sided = ContinuityCorrectedP(result.statistic, mean, variance);
  return result;
}

}  // namespace divopt
