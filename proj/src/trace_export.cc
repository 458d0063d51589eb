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

#include "divopt/trace_export.h"

#include <algorithm>
#include <iomanip>
#include <stdexcept>

namespace divopt {

namespace {

// Best objective of `trace` at evaluation count x: the last point at or
// before x, or nothing if the trace has not started yet.
class TraceCursor {
 public:
  explicit TraceCursor(const std::vector<TracePoint>& trace) : trace_(trace) {}

  bool ValueAt(int64_t x, double* value) {
    while (pos_ < trace_.size() && trace_[pos_].evaluations <= x) ++pos_;
    if (pos_ == 0) return false;
    *value = trace_[pos_ - 1].best_objective;
    return true;
  }

 private:
  const std::vector<TracePoint>& trace_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<CurvePoint> MeanCurve(
    const std::vector<std::vector<TracePoint>>& traces, int64_t stride) {
  if (stride <= 0) throw std::invalid_argument("MeanCurve: stride must be > 0");
  std::vector<int64_t> grid;
  int64_t end = 0;
  for (const auto& trace : traces) {
    if (trace.empty()) continue;
    if (!std::is_sorted(trace.begin(), trace.end(),
                        [](const TracePoint& a, const TracePoint& b) {
                          return a.evaluations < b.evaluations;
                        })) {
      throw std::invalid_argument("MeanCurve: trace is not ordered");
    }
    end = std::max(end, trace.back().evaluations);
    grid.push_back(trace.back().evaluations);
  }
  for (int64_t x = stride; x <= end; x += stride) grid.push_back(x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<TraceCursor> cursors(traces.begin(), traces.end());
  std::vector<CurvePoint> curve;
  for (int64_t x : grid) {
    double sum = 0.0;
    int count = 0;
    for (TraceCursor& cursor : cursors) {
      double value = 0.0;
      if (cursor.ValueAt(x, &value)) {
        sum += value;
        ++count;
      }
    }
    // Points are emitted only once every trial has started, so the mean is
    // over a fixed set and stays nondecreasing.
    if (count == static_cast<int>(traces.size())) {
      curve.push_back({x, sum / count});
    }
  }
  return curve;
}

std::map<std::string, std::vector<CurvePoint>> CurvesByAlgorithm(
    const std::vector<BenchRow>& rows, int64_t stride) {
  std::map<std::string, std::vector<std::vector<TracePoint>>> grouped;
  for (const BenchRow& row : rows) grouped[row.algorithm].push_back(row.trace);
  std::map<std::string, std::vector<CurvePoint>> curves;
  for (const auto& [name, traces] : grouped) {
    curves[name] = MeanCurve(traces, stride);
  }
  return curves;
}

void WriteCurve(std::ostream& out, const std::vector<CurvePoint>& curve,
                int64_t unit) {
  out << (unit > 0 ? "units" : "evaluations") << ",mean_best_objective\n";
  out << std::setprecision(17);
  for (const CurvePoint& p : curve) {
    if (unit > 0) {
      out << static_cast<double>(p.evaluations) / unit;
    } else {
      out << p.evaluations;
    }
    out << ',' << p.mean_best_objective << '\n';
  }
}

}  // namespace divopt
