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

#include "divopt/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "divopt/generators.h"
#include "divopt/greedy.h"
#include "divopt/gsemo.h"
#include "divopt/local_search.h"

namespace divopt {

namespace {

constexpr std::string_view kGsemoPrefix = "gsemo:";

RunResult RunGreedy(const Instance& instance) {
  switch (instance.diversity()) {
    case DiversityKind::kSum:
      return GreedySum(instance);
    case DiversityKind::kMin:
      return GreedyMin(instance);
    case DiversityKind::kMst:
      return GreedyMst(instance);
  }
  throw std::logic_error("unreachable diversity kind");
}

RunResult RunWarmLocalSearch(const Instance& instance, int max_swaps) {
  RunResult warm = GreedySum(instance);
  LocalSearchOptions options;
  options.warm_start = warm.best;
  options.max_swaps = max_swaps;
  RunResult result = LocalSearch(instance, options);
  for (TracePoint p : result.trace) {
    p.evaluations += warm.evaluations;
    if (!warm.trace.empty() && warm.trace.back().evaluations == p.evaluations) {
      warm.trace.back().best_objective =
          std::max(warm.trace.back().best_objective, p.best_objective);
    } else {
      warm.trace.push_back(p);
    }
  }
  result.trace = std::move(warm.trace);
  result.evaluations += warm.evaluations;
  return result;
}

RunResult RunGsemo(Formulation form, const Instance& instance,
                   const RngStream& rng, const AlgorithmOptions& options) {
  if (form == Formulation::kMinQualityPhase &&
      instance.diversity() == DiversityKind::kMin) {
    const int n = instance.n();
    const int k = instance.k();
    return GsemoMinPipeline(
        instance,
        options.gsemo_iterations.value_or(DefaultQualityPhaseIterations(n, k)),
        options.gsemo_iterations.value_or(
            DefaultDiversityPhaseIterations(n, k)),
        rng, options.trace_stride);
  }
  GsemoConfig config;
  config.formulation = form;
  config.budget = Budget::Iterations(
      options.gsemo_iterations.value_or(DefaultIterations(form, instance)));
  config.rng = rng;
  config.trace_stride = options.trace_stride;
  return Gsemo(instance, config);
}

std::string FormatDouble(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

Formulation DefaultFormulation(const Instance& instance) {
  switch (instance.diversity()) {
    case DiversityKind::kSum:
      return instance.is_cardinality() ? Formulation::kScaledCardinalitySum
                                       : Formulation::kMatroidSum;
    case DiversityKind::kMin:
      return Formulation::kMinQualityPhase;
    case DiversityKind::kMst:
      return Formulation::kMstPermutation;
  }
  throw std::logic_error("unreachable diversity kind");
}

int64_t DefaultIterations(Formulation form, const Instance& instance) {
  const int n = instance.n();
  const int k = instance.k();
  switch (form) {
    case Formulation::kMatroidSum:
      return std::min(DefaultGsemoIterations(n, k), kMatroidIterationCap);
    case Formulation::kMstPermutation:
      return DefaultQualityPhaseIterations(n, k);
    case Formulation::kMinQualityPhase:
      return DefaultQualityPhaseIterations(n, k);
    case Formulation::kMinDiversityPhase:
      return DefaultDiversityPhaseIterations(n, k);
    case Formulation::kScaledCardinalitySum:
    case Formulation::kPlainCardinalitySum:
      return DefaultGsemoIterations(n, k);
  }
  throw std::logic_error("unreachable formulation");
}

void ValidateAlgorithmName(std::string_view name) {
  if (name == "greedy" || name == "local_search" || name == "local_search2" ||
      name == "gsemo") {
    return;
  }
  if (name.starts_with(kGsemoPrefix)) {
    ParseFormulation(name.substr(kGsemoPrefix.size()));
    return;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

RunResult RunAlgorithm(std::string_view name, const Instance& instance,
                       const RngStream& rng, const AlgorithmOptions& options) {
  ValidateAlgorithmName(name);
  if (name == "greedy") return RunGreedy(instance);
  if (name == "local_search") return RunWarmLocalSearch(instance, 1);
  if (name == "local_search2") return RunWarmLocalSearch(instance, 2);
  if (name == "gsemo") {
    return RunGsemo(DefaultFormulation(instance), instance, rng, options);
  }
  const Formulation form = ParseFormulation(name.substr(kGsemoPrefix.size()));
  if (form == Formulation::kMinQualityPhase ||
      form == Formulation::kMinDiversityPhase) {
    // An explicit phase runs alone, not as the pipeline.
    GsemoConfig config;
    config.formulation = form;
    config.budget = Budget::Iterations(
        options.gsemo_iterations.value_or(DefaultIterations(form, instance)));
    config.rng = rng;
    config.trace_stride = options.trace_stride;
    return Gsemo(instance, config);
  }
  return RunGsemo(form, instance, rng, options);
}

std::vector<BenchRow> RunBench(const BenchPlan& plan) {
  if (plan.seeds_per_cell < 1) {
    throw std::invalid_argument("bench: seeds per cell must be >= 1");
  }
  if (plan.threads < 1) throw std::invalid_argument("bench: threads must be >= 1");
  for (const std::string& name : plan.algorithms) ValidateAlgorithmName(name);

  const size_t per_instance = plan.algorithms.size() * plan.seeds_per_cell;
  std::vector<BenchRow> rows(plan.instances.size() * per_instance);
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&]() {
    for (size_t cell = next++; cell < rows.size(); cell = next++) {
      const NamedInstance& named = plan.instances[cell / per_instance];
      const size_t rest = cell % per_instance;
      const std::string& algorithm = plan.algorithms[rest / plan.seeds_per_cell];
      const int seed = static_cast<int>(rest % plan.seeds_per_cell);
      try {
        const RngStream rng(plan.master_seed ^ Fnv1a64(named.id),
                            StreamId(seed, algorithm));
        const auto start = std::chrono::steady_clock::now();
        RunResult run = RunAlgorithm(algorithm, named.instance, rng,
                                     plan.options);
        const auto stop = std::chrono::steady_clock::now();
        BenchRow& row = rows[cell];
        row.instance_id = named.id;
        row.algorithm = algorithm;
        row.seed = seed;
        row.k = named.instance.k();
        row.lambda = named.instance.lambda();
        row.objective = run.objective;
        row.evaluations = run.evaluations;
        row.wallclock_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        row.trace = std::move(run.trace);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const int workers =
      std::min<int>(plan.threads, static_cast<int>(std::max<size_t>(rows.size(), 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<NamedInstance> SyntheticSweep(int n, const std::vector<int>& ks,
                                          const std::vector<double>& lambdas,
                                          int per_cell, uint64_t master_seed) {
  std::vector<NamedInstance> out;
  for (int k : ks) {
    for (double lambda : lambdas) {
      for (int i = 0; i < per_cell; ++i) {
        std::ostringstream id;
        id << "web_n" << n << "_k" << k << "_l" << lambda << "_" << i;
        const uint64_t seed = SplitMix64(master_seed ^ Fnv1a64(id.str()));
        out.push_back({id.str(), GenSyntheticWeb(n, seed, k, lambda)});
      }
    }
  }
  return out;
}

void WriteBenchTable(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance_id,algorithm,seed,k,lambda,objective,evaluations,"
         "wallclock_ms\n";
  for (const BenchRow& row : rows) {
    out << row.instance_id << ',' << row.algorithm << ',' << row.seed << ','
        << row.k << ',' << FormatDouble(row.lambda) << ','
        << FormatDouble(row.objective) << ',' << row.evaluations << ','
        << std::fixed << std::setprecision(3) << row.wallclock_ms
        << std::defaultfloat << '\n';
  }
}

}  // namespace divopt
