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

#include "divopt/oracle.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "divopt/objective.h"

namespace divopt {

namespace {

constexpr double kSlack = 1e-12;

Subset FromMask(int n, uint64_t mask) {
  Subset x(n);
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) x.Insert(i);
  }
  return x;
}

// Calls fn(mask) for every n-bit mask with `size` bits set, ascending.
template <typename Fn>
void ForEachMaskOfSize(int n, int size, Fn&& fn) {
  if (size > n) return;
  if (size == 0) {
    fn(uint64_t{0});
    return;
  }
  uint64_t mask = (uint64_t{1} << size) - 1;
  const uint64_t limit = uint64_t{1} << n;
  while (mask < limit) {
    fn(mask);
    // Gosper's hack: next larger integer with the same popcount.
    const uint64_t low = mask & (~mask + 1);
    const uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

void Record(SetFunctionReport& report, double slack_needed) {
  ++report.checks;
  if (slack_needed > kSlack) {
    ++report.violations;
    report.worst_violation = std::max(report.worst_violation, slack_needed);
  }
}

std::vector<double> AllValues(const QualityOracle& f) {
  const int n = f.size();
  if (n > 16) {
    throw std::invalid_argument("exhaustive set-function check needs n <= 16");
  }
  std::vector<double> values(size_t{1} << n);
  for (uint64_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = f.Value(FromMask(n, mask));
  }
  return values;
}

}  // namespace

OptResult BruteForceOpt(const Instance& instance) {
  const int n = instance.n();
  if (n > kBruteForceMaxItems) {
    throw std::invalid_argument("BruteForceOpt: n=" + std::to_string(n) +
                                " exceeds the enumeration guard");
  }
  int min_size = 0;
  int max_size = Rank(instance.constraint());
  if (const auto* u = std::get_if<UniformConstraint>(&instance.constraint())) {
    if (u->mode == CardinalityMode::kExact) min_size = u->k;
  }
  max_size = std::min(max_size, n);

  OptResult best;
  bool found = false;
  for (int size = min_size; size <= max_size; ++size) {
    ForEachMaskOfSize(n, size, [&](uint64_t mask) {
      Subset x = FromMask(n, mask);
      if (!IsFeasibleFinal(x, instance.constraint())) return;
      ++best.enumerated;
      const double value = Objective(x, instance);
      if (!found || value > best.opt_value) {
        found = true;
        best.opt_value = value;
        best.opt_subset = std::move(x);
      }
    });
  }
  if (!found) best.opt_subset = Subset(n);
  return best;
}

RatioCheck VerifyRatio(double objective, double opt_value, double ratio) {
  RatioCheck check;
  check.achieved = opt_value == 0.0 ? 1.0 : objective / opt_value;
  check.pass = check.achieved >= ratio - 1e-9;
  return check;
}

RatioCheck VerifyRatio(double objective, const Instance& instance,
                       double ratio) {
  return VerifyRatio(objective, BruteForceOpt(instance).opt_value, ratio);
}

SetFunctionReport CheckSubmodular(const QualityOracle& f, int64_t trials,
                                  RngStream& rng) {
  const int n = f.size();
  SetFunctionReport report;
  if (trials == 0) {
    const std::vector<double> values = AllValues(f);
    const uint64_t full = (uint64_t{1} << n) - 1;
    for (uint64_t y = 0; y <= full; ++y) {
      // Every submask x of y, including y itself and 0.
      for (uint64_t x = y;; x = (x - 1) & y) {
        for (int v = 0; v < n; ++v) {
          const uint64_t bit = uint64_t{1} << v;
          if (y & bit) continue;
          const double gain_x = values[x | bit] - values[x];
          const double gain_y = values[y | bit] - values[y];
          Record(report, gain_y - gain_x);
        }
        if (x == 0) break;
      }
    }
    return report;
  }
  if (n == 0) return report;
  for (int64_t t = 0; t < trials; ++t) {
    Subset y(n);
    Subset x(n);
    for (int i = 0; i < n; ++i) {
      if (rng.Bernoulli(0.5)) {
        y.Insert(i);
        if (rng.Bernoulli(0.5)) x.Insert(i);
      }
    }
    if (y.size() == n) continue;
    std::vector<ItemId> outside;
    y.ForEachNonMember([&](ItemId i) { outside.push_back(i); });
    const ItemId v = outside[rng.UniformInt(static_cast<int>(outside.size()))];
    Subset xv = x;
    xv.Insert(v);
    Subset yv = y;
    yv.Insert(v);
    Record(report, (f.Value(yv) - f.Value(y)) - (f.Value(xv) - f.Value(x)));
  }
  return report;
}

SetFunctionReport CheckMonotone(const QualityOracle& f, int64_t trials,
                                RngStream& rng) {
  const int n = f.size();
  SetFunctionReport report;
  if (trials == 0) {
    const std::vector<double> values = AllValues(f);
    for (uint64_t x = 0; x < values.size(); ++x) {
      for (int v = 0; v < n; ++v) {
        const uint64_t bit = uint64_t{1} << v;
        if (!(x & bit)) Record(report, values[x] - values[x | bit]);
      }
    }
    return report;
  }
  if (n == 0) return report;
  for (int64_t t = 0; t < trials; ++t) {
    Subset x(n);
    for (int i = 0; i < n; ++i) {
      if (rng.Bernoulli(0.5)) x.Insert(i);
    }
    const ItemId v = rng.UniformInt(n);
    Subset xv = x;
    xv.Insert(v);
    Record(report, f.Value(x) - f.Value(xv));
  }
  return report;
}

Instance HardMinInstance(int n) {
  if (n <= 0 || n % 18 != 0) {
    throw std::invalid_argument("HardMinInstance: n must be a positive "
                                "multiple of 18");
  }
  std::vector<double> weights(n, 0.0);
  std::fill(weights.begin(), weights.begin() + n / 2, 1.0);
  const double far = n / 9.0;
  std::vector<double> d(static_cast<size_t>(n) * n, 1.0);
  for (int i = 0; i < n; ++i) {
    d[i * n + i] = 0.0;
    if (i != 0) {
      d[i] = far;
      d[i * n] = far;
    }
  }
  UniformConstraint c{n / 2, CardinalityMode::kExact};
  return Instance(std::make_shared<ModularQuality>(std::move(weights)),
                  std::make_shared<DistanceMatrix>(n, std::move(d)), 1.0, c,
                  DiversityKind::kMin);
}

}  // namespace divopt
