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

#include "divopt/local_search.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "divopt/diversity.h"
#include "divopt/objective.h"

namespace divopt {

namespace {

constexpr double kRelativeTolerance = 1e-12;

// Scores exchanges against a fixed current basis using cached distance sums,
// so a neighbor costs O(1) diversity work plus one quality call.
class Neighborhood {
 public:
  Neighborhood(const Instance& instance, const Subset& x)
      : instance_(instance),
        x_(x),
        members_(x.Members()),
        modular_(dynamic_cast<const ModularQuality*>(&instance.quality())),
        dist_to_x_(instance.n(), 0.0) {
    const DistanceMatrix& d = instance.distance();
    for (ItemId v : members_) {
      const auto row = d.Row(v);
      for (ItemId u = 0; u < instance.n(); ++u) dist_to_x_[u] += row[u];
    }
    x.ForEachNonMember([&](ItemId u) { outsiders_.push_back(u); });
    quality_ = instance.quality().Value(x);
    diversity_ = SumDiversity(x, d);
    if (const auto* p = std::get_if<PartitionConstraint>(&instance.constraint())) {
      partition_ = p;
      counts_ = p->Counts(x);
    }
  }

  double value() const { return quality_ + instance_.lambda() * diversity_; }
  const std::vector<ItemId>& members() const { return members_; }
  const std::vector<ItemId>& outsiders() const { return outsiders_; }

  bool SingleFeasible(ItemId out, ItemId in) const {
    if (partition_ == nullptr) return true;
    const int part = partition_->part_of(in);
    return part == partition_->part_of(out) ||
           counts_[part] < partition_->caps()[part];
  }

  bool DoubleFeasible(ItemId o1, ItemId o2, ItemId i1, ItemId i2) const {
    if (partition_ == nullptr) return true;
    std::vector<int> counts = counts_;
    --counts[partition_->part_of(o1)];
    --counts[partition_->part_of(o2)];
    ++counts[partition_->part_of(i1)];
    ++counts[partition_->part_of(i2)];
    for (size_t p = 0; p < counts.size(); ++p) {
      if (counts[p] > partition_->caps()[p]) return false;
    }
    return true;
  }

  double SingleValue(ItemId out, ItemId in) const {
    const DistanceMatrix& d = instance_.distance();
    const double div =
        diversity_ - dist_to_x_[out] + dist_to_x_[in] - d(in, out);
    double q;
    if (modular_ != nullptr) {
      q = quality_ - modular_->weight(out) + modular_->weight(in);
    } else {
      Subset y = x_;
      y.Remove(out);
      y.Insert(in);
      q = instance_.quality().Value(y);
    }
    return q + instance_.lambda() * div;
  }

  double DoubleValue(ItemId o1, ItemId o2, ItemId i1, ItemId i2) const {
    const DistanceMatrix& d = instance_.distance();
    const double div = diversity_ - dist_to_x_[o1] - dist_to_x_[o2] +
                       d(o1, o2) + dist_to_x_[i1] - d(i1, o1) - d(i1, o2) +
                       dist_to_x_[i2] - d(i2, o1) - d(i2, o2) + d(i1, i2);
    double q;
    if (modular_ != nullptr) {
      q = quality_ - modular_->weight(o1) - modular_->weight(o2) +
          modular_->weight(i1) + modular_->weight(i2);
    } else {
      Subset y = x_;
      y.Remove(o1);
      y.Remove(o2);
      y.Insert(i1);
      y.Insert(i2);
      q = instance_.quality().Value(y);
    }
    return q + instance_.lambda() * div;
  }

 private:
  const Instance& instance_;
  const Subset& x_;
  std::vector<ItemId> members_;
  std::vector<ItemId> outsiders_;
  const ModularQuality* modular_;
  const PartitionConstraint* partition_ = nullptr;
  std::vector<int> counts_;
  std::vector<double> dist_to_x_;
  double quality_ = 0.0;
  double diversity_ = 0.0;
};

struct Move {
  ItemId out[2] = {-1, -1};
  ItemId in[2] = {-1, -1};
  double value = -std::numeric_limits<double>::infinity();
};

class BudgetGuard {
 public:
  BudgetGuard(EvaluationCounter& counter, std::optional<int64_t> limit)
      : counter_(counter), limit_(limit) {}
  // Charges one evaluation if the budget allows it.
  bool Take() {
    if (limit_ && counter_.count() >= *limit_) return false;
    counter_.Charge(1);
    return true;
  }
  bool exhausted() const { return limit_ && counter_.count() >= *limit_; }

 private:
  EvaluationCounter& counter_;
  std::optional<int64_t> limit_;
};

Subset ColdStart(const Instance& instance, BudgetGuard& budget) {
  const int n = instance.n();
  const ConstraintSpec& c = instance.constraint();
  const int rank = Rank(c);
  Subset x(n);
  if (rank >= 2) {
    double best = -std::numeric_limits<double>::infinity();
    ItemId bu = -1, bv = -1;
    for (ItemId u = 0; u < n; ++u) {
      for (ItemId v = u + 1; v < n; ++v) {
        Subset pair(n, {u, v});
        if (!IsIndependent(pair, c)) continue;
        if (!budget.Take()) break;
        const double value = instance.quality().Value(pair) +
                             instance.lambda() * instance.distance()(u, v);
        if (bu == -1 || value > best) {
          best = value;
          bu = u;
          bv = v;
        }
      }
    }
    if (bu != -1) {
      x.Insert(bu);
      x.Insert(bv);
    }
  } else if (rank == 1) {
    double best = -std::numeric_limits<double>::infinity();
    ItemId bu = -1;
    for (ItemId u = 0; u < n; ++u) {
      Subset single(n, {u});
      if (!IsIndependent(single, c)) continue;
      if (!budget.Take()) break;
      const double value = instance.quality().Value(single);
      if (bu == -1 || value > best) {
        best = value;
        bu = u;
      }
    }
    if (bu != -1) x.Insert(bu);
  }
  return ExtendToBasis(x, c);
}

}  // namespace

RunResult LocalSearch(const Instance& instance,
                      const LocalSearchOptions& options) {
  if (instance.diversity() != DiversityKind::kSum) {
    throw std::invalid_argument("LocalSearch: needs sum-diversity");
  }
  if (options.max_swaps != 1 && options.max_swaps != 2) {
    throw std::invalid_argument("LocalSearch: max_swaps must be 1 or 2");
  }
  if (options.epsilon < 0 || !std::isfinite(options.epsilon)) {
    throw std::invalid_argument("LocalSearch: bad epsilon");
  }
  if (options.max_evaluations && *options.max_evaluations < 0) {
    throw std::invalid_argument("LocalSearch: negative budget");
  }
  const ConstraintSpec& c = instance.constraint();
  if (options.warm_start) {
    if (options.warm_start->universe_size() != instance.n() ||
        !IsIndependent(*options.warm_start, c)) {
      throw std::invalid_argument("LocalSearch: warm start is not feasible");
    }
  }

  EvaluationCounter counter;
  BudgetGuard budget(counter, options.max_evaluations);
  RunResult result;
  Subset x = options.warm_start ? ExtendToBasis(*options.warm_start, c)
                                : ColdStart(instance, budget);
  double current = Objective(x, instance);
  double best_seen = current;
  result.trace.push_back({counter.count(), best_seen});

  while (!budget.exhausted()) {
    const Neighborhood hood(instance, x);
    Move best;
    bool cut = false;
    for (ItemId out : hood.members()) {
      for (ItemId in : hood.outsiders()) {
        if (!hood.SingleFeasible(out, in)) continue;
        if (!budget.Take()) {
          cut = true;
          break;
        }
        const double value = hood.SingleValue(out, in);
        if (value > best.value) best = {{out, -1}, {in, -1}, value};
      }
      if (cut) break;
    }
    if (options.max_swaps == 2 && !cut) {
      const auto& mem = hood.members();
      const auto& outs = hood.outsiders();
      for (size_t a = 0; a < mem.size() && !cut; ++a) {
        for (size_t b = a + 1; b < mem.size() && !cut; ++b) {
          for (size_t i = 0; i < outs.size() && !cut; ++i) {
            for (size_t j = i + 1; j < outs.size(); ++j) {
              if (!hood.DoubleFeasible(mem[a], mem[b], outs[i], outs[j])) {
                continue;
              }
              if (!budget.Take()) {
                cut = true;
                break;
              }
              const double value =
                  hood.DoubleValue(mem[a], mem[b], outs[i], outs[j]);
              if (value > best.value) {
                best = {{mem[a], mem[b]}, {outs[i], outs[j]}, value};
              }
            }
          }
        }
      }
    }
    const double threshold = current * (1.0 + options.epsilon) +
                             kRelativeTolerance * std::abs(current);
    const bool improved = best.out[0] != -1 && best.value > threshold;
    if (improved) {
      for (int s = 0; s < 2; ++s) {
        if (best.out[s] != -1) x.Remove(best.out[s]);
      }
      for (int s = 0; s < 2; ++s) {
        if (best.in[s] != -1) x.Insert(best.in[s]);
      }
      current = Objective(x, instance);
      best_seen = std::max(best_seen, current);
    }
    result.trace.push_back({counter.count(), best_seen});
    if (!improved) break;
  }

  result.best = std::move(x);
  result.objective = current;
  result.feasible = IsFeasibleFinal(result.best, c);
  result.evaluations = counter.count();
  return result;
}

}  // namespace divopt
