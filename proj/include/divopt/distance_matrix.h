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

#ifndef DIVOPT_DISTANCE_MATRIX_H_
#define DIVOPT_DISTANCE_MATRIX_H_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "divopt/subset.h"

namespace divopt {

inline constexpr double kSymmetryTolerance = 1e-12;

struct MetricReport {
  bool metric = true;
  // Smallest alpha >= 1 with alpha * (d(u,v) + d(v,w)) >= d(u,w) for all
  // triples.
  double alpha = 1.0;
  // A maximizing triple (u, v, w) when the matrix is not a metric.
  std::optional<std::array<ItemId, 3>> witness;
};

// Scans all ordered triples. O(n^3).
MetricReport ValidateMetric(int n, std::span<const double> row_major);

// Dense symmetric distance matrix with zero diagonal. Input is validated on
// construction (negative entries, asymmetry or nonzero diagonal beyond
// kSymmetryTolerance throw DataError) and the relaxed-triangle constant alpha
// is computed eagerly.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<double> row_major);

  int size() const { return n_; }
  double operator()(ItemId u, ItemId v) const { return values_[u * n_ + v]; }
  std::span<const double> Row(ItemId u) const {
    return {values_.data() + static_cast<size_t>(u) * n_,
            static_cast<size_t>(n_)};
  }
  std::span<const double> values() const { return values_; }

  const MetricReport& metric_report() const { return report_; }
  bool is_metric() const { return report_.metric; }
  double alpha() const { return report_.alpha; }

  // Copy with d(u,v) = d(v,u) = value. Revalidates.
  DistanceMatrix WithEntry(ItemId u, ItemId v, double value) const;

  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  std::vector<double> values_;
  MetricReport report_;
};

}  // namespace divopt

#endif  // DIVOPT_DISTANCE_MATRIX_H_
