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

#include "divopt/dynamic.h"

#include <stdexcept>

#include "divopt/errors.h"
#include "divopt/gsemo.h"
#include "divopt/local_search.h"
#include "divopt/objective.h"

namespace divopt {

namespace {

const ModularQuality& RequireModular(const Instance& instance) {
  const auto* modular =
      dynamic_cast<const ModularQuality*>(&instance.quality());
  if (modular == nullptr) {
    throw DataError("dynamic changes need a modular quality function");
  }
  return *modular;
}

}  // namespace

ChangeBatch SampleChange(RngStream& rng, const Instance& instance, int m) {
  if (m < 1) throw std::invalid_argument("SampleChange: m must be >= 1");
  RequireModular(instance);
  const int n = instance.n();
  const DistanceMatrix& d = instance.distance();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (d(u, v) < 1.0 || d(u, v) > 2.0) {
        throw DataError("dynamic changes need distances in [1, 2]");
      }
    }
  }
  ChangeBatch batch;
  batch.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (n < 2 || rng.Bernoulli(0.5)) {
      const ItemId item = rng.UniformInt(n);
      batch.push_back(RelevanceReset{item, rng.Uniform(0.0, 1.0)});
    } else {
      const ItemId u = rng.UniformInt(n);
      ItemId v = rng.UniformInt(n - 1);
      if (v >= u) ++v;
      batch.push_back(DistanceReset{std::min(u, v), std::max(u, v),
                                    rng.Uniform(1.0, 2.0)});
    }
  }
  return batch;
}

Instance ApplyChange(const Instance& instance, const ChangeBatch& batch) {
  if (batch.empty()) return instance;
  std::vector<double> weights = RequireModular(instance).weights();
  const int n = instance.n();
  std::vector<double> d(instance.distance().values().begin(),
                        instance.distance().values().end());
  bool weights_changed = false;
  bool distances_changed = false;
  for (const Perturbation& p : batch) {
    if (const auto* r = std::get_if<RelevanceReset>(&p)) {
      weights.at(r->item) = r->weight;
      weights_changed = true;
    } else {
      const auto& reset = std::get<DistanceReset>(p);
      if (reset.u == reset.v) {
        throw std::invalid_argument("DistanceReset on a diagonal entry");
      }
      d.at(static_cast<size_t>(reset.u) * n + reset.v) = reset.distance;
      d.at(static_cast<size_t>(reset.v) * n + reset.u) = reset.distance;
      distances_changed = true;
    }
  }
  Instance out = instance;
  if (weights_changed) {
    out = out.WithQuality(std::make_shared<ModularQuality>(std::move(weights)));
  }
  if (distances_changed) {
    out = out.WithDistance(std::make_shared<DistanceMatrix>(n, std::move(d)));
  }
  return out;
}

DynamicOutcome RunDynamic(const Instance& initial_instance,
                          const DynamicSchedule& schedule,
                          const std::vector<DynamicAlgorithm>& algorithms,
                          const Subset& initial, const RngStream& rng) {
  if (schedule.evaluations_per_change < 1) {
    throw std::invalid_argument("RunDynamic: per-change budget below one "
                                "evaluation");
  }
  if (initial.universe_size() != initial_instance.n() ||
      !IsIndependent(initial, initial_instance.constraint())) {
    throw std::invalid_argument("RunDynamic: initial solution is infeasible");
  }
  DynamicOutcome outcome;
  outcome.final_solutions.assign(algorithms.size(), initial);
  Instance current = initial_instance;
  for (size_t c = 0; c < schedule.changes.size(); ++c) {
    current = ApplyChange(current, schedule.changes[c]);
    outcome.instances.push_back(current);
    for (size_t a = 0; a < algorithms.size(); ++a) {
      const DynamicAlgorithm& algo = algorithms[a];
      Subset& solution = outcome.final_solutions[a];
      RunResult run;
      if (algo.kind == DynamicAlgorithm::Kind::kGsemo) {
        GsemoConfig config;
        config.formulation = algo.formulation;
        config.budget = Budget::Evaluations(schedule.evaluations_per_change);
        config.rng = rng.Fork(c * 1000003 + a);
        config.warm_start = solution;
        run = Gsemo(current, config);
      } else {
        LocalSearchOptions options;
        options.warm_start = solution;
        options.max_swaps = algo.max_swaps;
        options.epsilon = algo.epsilon;
        options.max_evaluations = schedule.evaluations_per_change;
        run = LocalSearch(current, options);
      }
      if (!IsIndependent(run.best, current.constraint())) {
        throw std::logic_error("RunDynamic: algorithm left the feasible "
                               "region");
      }
      solution = run.best;
      outcome.records.push_back({static_cast<int>(c), algo.name, run.objective,
                                 run.evaluations, run.best});
    }
  }
  return outcome;
}

}  // namespace divopt
