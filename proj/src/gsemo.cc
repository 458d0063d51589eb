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

#include "divopt/gsemo.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace divopt {

void Budget::Validate() const {
  if (iterations.has_value() == evaluations.has_value()) {
    throw std::invalid_argument("budget: set exactly one of iterations and "
                                "evaluations");
  }
  if (limit() < 0) throw std::invalid_argument("budget: negative limit");
}

Population::Population(Individual seed) { members_.push_back(std::move(seed)); }

bool Population::Offer(Individual offspring) {
  for (const Individual& z : members_) {
    if (Dominates(z.value, offspring.value).strict) return false;
  }
  std::erase_if(members_, [&](const Individual& z) {
    return Dominates(offspring.value, z.value).weak;
  });
  auto pos = std::upper_bound(
      members_.begin(), members_.end(), offspring.subset.size(),
      [](int size, const Individual& z) { return size < z.subset.size(); });
  members_.insert(pos, std::move(offspring));
  return true;
}

void Population::CheckInvariants(Formulation form,
                                 const Instance& instance) const {
  for (size_t i = 0; i < members_.size(); ++i) {
    if (!OffspringFeasible(form, members_[i].subset, instance)) {
      throw std::logic_error("population member not admitted: " +
                             members_[i].subset.ToString());
    }
    for (size_t j = i + 1; j < members_.size(); ++j) {
      if (members_[i].subset.size() == members_[j].subset.size()) {
        throw std::logic_error("two population members share a size");
      }
      if (!Dominates(members_[i].value, members_[j].value).incomparable) {
        throw std::logic_error("population members are comparable: " +
                               members_[i].subset.ToString() + " vs " +
                               members_[j].subset.ToString());
      }
    }
  }
}

namespace {

void CheckFit(Formulation form, const Instance& instance) {
  const bool sum = instance.diversity() == DiversityKind::kSum;
  bool ok = true;
  switch (form) {
    case Formulation::kScaledCardinalitySum:
      ok = sum && instance.is_cardinality();
      break;
    case Formulation::kPlainCardinalitySum:
      ok = instance.is_cardinality();
      break;
    case Formulation::kMinQualityPhase:
    case Formulation::kMinDiversityPhase:
      ok = instance.diversity() == DiversityKind::kMin;
      break;
    case Formulation::kMstPermutation:
      ok = instance.diversity() == DiversityKind::kMst;
      break;
    case Formulation::kMatroidSum:
      ok = sum;
      break;
  }
  if (!ok) {
    throw std::invalid_argument("formulation " +
                                std::string(FormulationName(form)) +
                                " does not fit a " +
                                std::string(DiversityKindName(
                                    instance.diversity())) +
                                "-diversity instance with this constraint");
  }
}

int64_t CeilE(double x) {
  return static_cast<int64_t>(std::ceil(std::numbers::e * x - 1e-9));
}

}  // namespace

int64_t DefaultGsemoIterations(int n, int k) {
  return CeilE(static_cast<double>(n) * k * k * k / 2.0);
}

int64_t DefaultQualityPhaseIterations(int n, int k) {
  return CeilE(static_cast<double>(n) * k * (k + 1));
}

int64_t DefaultDiversityPhaseIterations(int n, int k) {
  return CeilE(static_cast<double>(n) * k * k);
}

RunResult Gsemo(const Instance& instance, const GsemoConfig& config) {
  return Gsemo(instance, config, nullptr);
}

RunResult Gsemo(const Instance& instance, const GsemoConfig& config,
                std::vector<Individual>* final_population) {
  config.budget.Validate();
  if (config.trace_stride < 0) {
    throw std::invalid_argument("Gsemo: negative trace stride");
  }
  const Formulation form = config.formulation;
  CheckFit(form, instance);
  const int n = instance.n();
  const bool permuted = form == Formulation::kMstPermutation;

  Individual seed;
  seed.subset = config.warm_start ? *config.warm_start : Subset(n);
  if (seed.subset.universe_size() != n) {
    throw std::invalid_argument("Gsemo: warm start has the wrong universe");
  }
  if (!OffspringFeasible(form, seed.subset, instance)) {
    throw std::invalid_argument("Gsemo: warm start is not admitted");
  }
  if (permuted) {
    seed.perm = config.warm_perm ? *config.warm_perm : seed.subset.Members();
  }
  seed.value = Evaluate(form, seed.subset, seed.perm ? &*seed.perm : nullptr,
                        instance);
  Population population(std::move(seed));

  RngStream rng = config.rng;
  const double flip_probability = n > 0 ? 1.0 / n : 1.0;
  std::geometric_distribution<int> gap(flip_probability);
  EvaluationCounter counter;
  RunResult result;
  double best_seen = -std::numeric_limits<double>::infinity();

  auto record = [&]() {
    const FinalSolution now = ExtractFinal(form, population.members(), instance);
    if (now.feasible) best_seen = std::max(best_seen, now.objective);
    if (best_seen > -std::numeric_limits<double>::infinity()) {
      result.trace.push_back({counter.count(), best_seen});
    }
  };

  const int64_t iterations = config.budget.limit();
  for (int64_t it = 0; it < iterations; ++it) {
    counter.Charge(1);
    const auto members = population.members();
    const Individual& parent =
        members[members.size() == 1 ? 0 : rng.UniformInt(members.size())];
    Individual child;
    child.subset = parent.subset;
    if (n > 0) {
      for (int pos = gap(rng); pos < n; pos += 1 + gap(rng)) {
        child.subset.Flip(pos);
      }
    }
    if (OffspringFeasible(form, child.subset, instance)) {
      if (permuted) child.perm = MutatePermutation(*parent.perm, child.subset);
      child.value = Evaluate(form, child.subset,
                             child.perm ? &*child.perm : nullptr, instance);
      population.Offer(std::move(child));
      if (config.check_invariants) population.CheckInvariants(form, instance);
    }
    if (config.trace_stride > 0 && counter.count() % config.trace_stride == 0) {
      record();
    }
  }
  if (result.trace.empty() || result.trace.back().evaluations != counter.count()) {
    record();
  }

  const FinalSolution final_solution =
      ExtractFinal(form, population.members(), instance);
  result.best = final_solution.subset;
  result.perm = final_solution.perm;
  result.objective = final_solution.objective;
  result.feasible = final_solution.feasible;
  result.evaluations = counter.count();
  if (final_population != nullptr) {
    final_population->assign(population.members().begin(),
                             population.members().end());
  }
  return result;
}

RunResult GsemoMinPipeline(const Instance& instance,
                           int64_t quality_iterations,
                           int64_t diversity_iterations, const RngStream& rng,
                           int64_t trace_stride) {
  if (instance.diversity() != DiversityKind::kMin) {
    throw std::invalid_argument("GsemoMinPipeline: needs min-diversity");
  }
  GsemoConfig quality;
  quality.formulation = Formulation::kMinQualityPhase;
  quality.budget = Budget::Iterations(quality_iterations);
  quality.rng = rng.Fork(1);
  quality.trace_stride = trace_stride;
  GsemoConfig spread = quality;
  spread.formulation = Formulation::kMinDiversityPhase;
  spread.budget = Budget::Iterations(diversity_iterations);
  spread.rng = rng.Fork(2);

  RunResult first = Gsemo(instance, quality);
  RunResult second = Gsemo(instance, spread);

  RunResult result;
  const bool take_second =
      second.feasible &&
      (!first.feasible || second.objective > first.objective);
  const RunResult& winner = take_second ? second : first;
  result.best = winner.best;
  result.objective = winner.objective;
  result.feasible = winner.feasible;
  result.evaluations = first.evaluations + second.evaluations;
  result.trace = first.trace;
  double best = result.trace.empty() ? -std::numeric_limits<double>::infinity()
                                     : result.trace.back().best_objective;
  for (const TracePoint& p : second.trace) {
    best = std::max(best, p.best_objective);
    result.trace.push_back({first.evaluations + p.evaluations, best});
  }
  return result;
}

}  // namespace divopt
