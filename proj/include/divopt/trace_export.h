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

// Mean best-so-far curves over trials, for plotting objective against cost.

#ifndef DIVOPT_TRACE_EXPORT_H_
#define DIVOPT_TRACE_EXPORT_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "divopt/bench.h"
#include "divopt/run.h"

namespace divopt {

struct CurvePoint {
  int64_t evaluations = 0;
  double mean_best_objective = 0.0;
};

// Averages best-so-far step functions at every multiple of `stride` and at
// each trace's final point. A trace that ends early holds its last value;
// grid points before some trace has started are skipped. Throws
// std::invalid_argument for a non-positive stride or an unordered trace.
std::vector<CurvePoint> MeanCurve(const std::vector<std::vector<TracePoint>>& traces,
                                  int64_t stride);

// One curve per algorithm, averaged over all bench rows of that algorithm.
std::map<std::string, std::vector<CurvePoint>> CurvesByAlgorithm(
    const std::vector<BenchRow>& rows, int64_t stride);

// Writes "evaluations,mean_best_objective" rows. A positive `unit` (e.g. k n)
// divides the x-axis and renames the column to "units".
void WriteCurve(std::ostream& out, const std::vector<CurvePoint>& curve,
                int64_t unit = 0);

}  // namespace divopt

#endif  // DIVOPT_TRACE_EXPORT_H_
