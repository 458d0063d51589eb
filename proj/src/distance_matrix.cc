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

#include "divopt/distance_matrix.h"

#include <cmath>
#include <limits>
#include <string>

#include "divopt/errors.h"

namespace divopt {

namespace {

void CheckShape(int n, std::span<const double> d) {
  if (n < 0) throw DataError("distance matrix: negative size");
  if (d.size() != static_cast<size_t>(n) * n) {
    throw DataError("distance matrix: expected " + std::to_string(n * n) +
                    " values, got " + std::to_string(d.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(d[i * n + i]) > kSymmetryTolerance) {
      throw DataError("distance matrix: nonzero diagonal at " +
                      std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      double v = d[i * n + j];
      if (!std::isfinite(v) || v < 0) {
        throw DataError("distance matrix: invalid entry at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (std::abs(v - d[j * n + i]) > kSymmetryTolerance) {
        throw DataError("distance matrix: asymmetric at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

MetricReport ValidateMetric(int n, std::span<const double> d) {
  CheckShape(n, d);
  MetricReport report;
  // Symmetry makes (u,v,w) and (w,v,u) equivalent, so u < w suffices. Triples
  // with a repeated item have ratio <= 1 and never raise alpha.
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      const double far = d[u * n + w];
      for (int v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        const double via = d[u * n + v] + d[v * n + w];
        double ratio;
        if (via > 0) {
          ratio = far / via;
        } else {
          ratio = far > 0 ? std::numeric_limits<double>::infinity() : 1.0;
        }
        if (ratio > report.alpha) {
          report.alpha = ratio;
          report.witness = std::array<ItemId, 3>{u, v, w};
        }
      }
    }
  }
  report.metric = report.alpha <= 1.0 + 1e-12;
  if (report.metric) report.witness.reset();
  return report;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<double> row_major)
    : n_(n), values_(std::move(row_major)) {
  report_ = ValidateMetric(n_, values_);
}

DistanceMatrix DistanceMatrix::WithEntry(ItemId u, ItemId v,
                                         double value) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw std::invalid_argument("DistanceMatrix::WithEntry: bad pair");
  }
  std::vector<double> copy = values_;
  copy[u * n_ + v] = value;
  copy[v * n_ + u] = value;
  return DistanceMatrix(n_, std::move(copy));
}

}  // namespace divopt
