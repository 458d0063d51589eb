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

#include "divopt/greedy.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "divopt/objective.h"

namespace divopt {

namespace {

int CardinalityBudget(const Instance& instance, DiversityKind expected,
                      const char* who) {
  if (!instance.is_cardinality()) {
    throw std::invalid_argument(std::string(who) +
                                ": needs a cardinality constraint");
  }
  if (instance.diversity() != expected) {
    throw std::invalid_argument(std::string(who) +
                                ": wrong diversity kind for this greedy");
  }
  const int k = instance.k();
  if (k > instance.n()) throw std::invalid_argument(std::string(who) + ": k > n");
  return k;
}

// Index of the largest score over non-members; lowest index on ties.
template <typename Score>
ItemId ArgmaxOutside(const Subset& x, Score&& score) {
  ItemId best = -1;
  double best_score = -std::numeric_limits<double>::infinity();
  x.ForEachNonMember([&](ItemId u) {
    const double s = score(u);
    if (best == -1 || s > best_score) {
      best = u;
      best_score = s;
    }
  });
  return best;
}

void Finish(RunResult& result, const Instance& instance,
            const EvaluationCounter& counter) {
  const ObjectiveValue value = EvaluateObjective(result.best, instance);
  result.objective = value.value;
  result.feasible = value.feasible;
  result.evaluations = counter.count();
  double best = result.trace.empty() ? result.objective
                                     : std::max(result.trace.back().best_objective,
                                                result.objective);
  if (result.trace.empty() || result.trace.back().evaluations != counter.count()) {
    result.trace.push_back({counter.count(), best});
  }
}

}  // namespace

RunResult GreedySum(const Instance& instance) {
  const int k = CardinalityBudget(instance, DiversityKind::kSum, "GreedySum");
  const int n = instance.n();
  const DistanceMatrix& d = instance.distance();
  const QualityOracle& f = instance.quality();
  const double lambda = instance.lambda();

  EvaluationCounter counter;
  RunResult result;
  Subset x(n);
  // dist_to_x[u] = sum_{v in X} d(u,v).
  std::vector<double> dist_to_x(n, 0.0);
  double best = 0.0;
  for (int step = 0; step < k; ++step) {
    counter.Charge(n - step);
    const ItemId pick = ArgmaxOutside(x, [&](ItemId u) {
      return f.Marginal(x, u) / 2.0 + lambda * dist_to_x[u];
    });
    x.Insert(pick);
    const auto row = d.Row(pick);
    for (ItemId u = 0; u < n; ++u) dist_to_x[u] += row[u];
    best = std::max(best, Objective(x, instance));
    result.trace.push_back({counter.count(), best});
  }
  result.best = std::move(x);
  Finish(result, instance, counter);
  return result;
}

RunResult GreedyMin(const Instance& instance) {
  const int k = CardinalityBudget(instance, DiversityKind::kMin, "GreedyMin");
  const int n = instance.n();
  const DistanceMatrix& d = instance.distance();
  const QualityOracle& f = instance.quality();

  EvaluationCounter counter;
  Subset quality_chain(n);
  Subset spread_chain(n);
  // Distance from each item to the dispersion chain.
  std::vector<double> dist_to_y(n, std::numeric_limits<double>::infinity());
  for (int step = 0; step < k; ++step) {
    counter.Charge(2 * static_cast<int64_t>(n - step));
    quality_chain.Insert(ArgmaxOutside(
        quality_chain, [&](ItemId u) { return f.Marginal(quality_chain, u); }));
    const ItemId far =
        step == 0 ? 0
                  : ArgmaxOutside(spread_chain,
                                  [&](ItemId u) { return dist_to_y[u]; });
    spread_chain.Insert(far);
    const auto row = d.Row(far);
    for (ItemId u = 0; u < n; ++u) dist_to_y[u] = std::min(dist_to_y[u], row[u]);
  }
  const ObjectiveValue qx = EvaluateObjective(quality_chain, instance, &counter);
  const ObjectiveValue qy = EvaluateObjective(spread_chain, instance, &counter);
  RunResult result;
  result.best = qx.value >= qy.value ? quality_chain : spread_chain;
  Finish(result, instance, counter);
  return result;
}

RunResult GreedyMst(const Instance& instance) {
  const int k = CardinalityBudget(instance, DiversityKind::kMst, "GreedyMst");
  const int n = instance.n();
  const DistanceMatrix& d = instance.distance();
  const QualityOracle& f = instance.quality();
  const double lambda = instance.lambda();

  EvaluationCounter counter;
  Subset x(n);
  // min_{v in X} d(u,v), with 0 standing in for the empty minimum.
  std::vector<double> nearest(n, 0.0);
  for (int step = 0; step < k; ++step) {
    counter.Charge(n - step);
    const ItemId pick = ArgmaxOutside(x, [&](ItemId u) {
      return f.Marginal(x, u) + lambda * nearest[u];
    });
    const auto row = d.Row(pick);
    if (x.empty()) {
      for (ItemId u = 0; u < n; ++u) nearest[u] = row[u];
    } else {
      for (ItemId u = 0; u < n; ++u) nearest[u] = std::min(nearest[u], row[u]);
    }
    x.Insert(pick);
  }
  RunResult result;
  result.best = std::move(x);
  Finish(result, instance, counter);
  return result;
}

}  // namespace divopt
