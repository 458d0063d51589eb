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

//
// Benchmark orchestration: runs every (instance, algorithm, seed) cell of a
// plan and collects one result row per cell.
//
// Algorithm names:
//   greedy          the greedy algorithm matching the instance's diversity
//   local_search    1-swap local search warm-started from greedy
//   local_search2   the same with double swaps
//   gsemo           GSEMO with the formulation matching the instance
//   gsemo:<form>    GSEMO with an explicit formulation, e.g. gsemo:plain_sum
//

#ifndef DIVOPT_BENCH_H_
#define DIVOPT_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "divopt/formulation.h"
#include "divopt/instance.h"
#include "divopt/rng.h"
#include "divopt/run.h"

namespace divopt {

inline constexpr int64_t kMatroidIterationCap = 1'000'000;

// The formulation "gsemo" picks: scaled_sum for sum-diversity under a
// cardinality constraint, matroid_sum under a partition matroid,
// min_quality for min-diversity (run as the two-phase pipeline), and
// mst_permutation for mst-diversity.
Formulation DefaultFormulation(const Instance& instance);

// Default GSEMO iterations: ceil(e n k^3 / 2) for the sum formulations
// (capped at kMatroidIterationCap for matroid_sum), ceil(e n k (k + 1)) for
// mst_permutation. Min-diversity uses the two pipeline budgets instead.
int64_t DefaultIterations(Formulation form, const Instance& instance);

struct AlgorithmOptions {
  int64_t trace_stride = 0;
  // Overrides the default GSEMO iteration budget (per phase for the pipeline).
  std::optional<int64_t> gsemo_iterations;
};

// Runs one named algorithm. Throws std::invalid_argument for an unknown name
// or an algorithm that does not fit the instance. Local search counts the
// greedy warm start's evaluations too.
RunResult RunAlgorithm(std::string_view name, const Instance& instance,
                       const RngStream& rng, const AlgorithmOptions& options);

// Throws std::invalid_argument unless `name` is a known algorithm name.
void ValidateAlgorithmName(std::string_view name);

struct NamedInstance {
  std::string id;
  Instance instance;
};

struct BenchPlan {
  std::vector<NamedInstance> instances;
  std::vector<std::string> algorithms;
  int seeds_per_cell = 1;
  uint64_t master_seed = 0;
  // Worker threads; cells are independent, so results do not depend on it.
  int threads = 1;
  AlgorithmOptions options;
};

struct BenchRow {
  std::string instance_id;
  std::string algorithm;
  int seed = 0;
  int k = 0;
  double lambda = 0.0;
  double objective = 0.0;
  int64_t evaluations = 0;
  double wallclock_ms = 0.0;
  std::vector<TracePoint> trace;
};

// Rows ordered by instance, then algorithm, then seed. Each cell draws from
// RngStream(master_seed ^ hash(instance id), StreamId(seed, algorithm)).
std::vector<BenchRow> RunBench(const BenchPlan& plan);

// Synthetic web instances for every (k, lambda) pair, `per_cell` each, with
// ids "web_n<n>_k<k>_l<lambda>_<i>".
std::vector<NamedInstance> SyntheticSweep(int n, const std::vector<int>& ks,
                                          const std::vector<double>& lambdas,
                                          int per_cell, uint64_t master_seed);

// Comma-separated table with header instance_id,algorithm,seed,k,lambda,
// objective,evaluations,wallclock_ms. Doubles are printed with 17
// significant digits.
void WriteBenchTable(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace divopt

#endif  // DIVOPT_BENCH_H_
