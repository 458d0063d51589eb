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

#include "divopt/verify.h"

#include <cmath>
#include <numbers>

#include "divopt/generators.h"
#include "divopt/oracle.h"

namespace divopt {

std::optional<double> GuaranteedRatio(const std::string& algorithm,
                                      const Instance& instance) {
  const bool gsemo = algorithm == "gsemo";
  switch (instance.diversity()) {
    case DiversityKind::kSum:
      if (instance.is_cardinality()) {
        if (!gsemo && algorithm != "greedy") return std::nullopt;
        return 1.0 / (2.0 * std::max(1.0, instance.distance().alpha()));
      }
      if (!gsemo) return std::nullopt;
      return 0.5 - kMatroidEpsilon / (4.0 * instance.n());
    case DiversityKind::kMin:
      if (!gsemo) return std::nullopt;
      return 0.25;
    case DiversityKind::kMst:
      if (!gsemo || instance.k() < 2) return std::nullopt;
      return (1.0 - 1.0 / std::numbers::e) / (2.0 * std::log2(instance.k()));
  }
  return std::nullopt;
}

std::vector<VerifyRow> VerifyInstances(const std::vector<NamedInstance>& instances,
                                       uint64_t seed) {
  std::vector<VerifyRow> rows;
  for (const NamedInstance& named : instances) {
    const Instance& instance = named.instance;
    const double opt = BruteForceOpt(instance).opt_value;
    for (const std::string algorithm : {"greedy", "gsemo"}) {
      const std::optional<double> ratio = GuaranteedRatio(algorithm, instance);
      if (!ratio) continue;
      const RngStream rng(seed ^ Fnv1a64(named.id), StreamId(0, algorithm));
      const RunResult run = RunAlgorithm(algorithm, instance, rng, {});
      const RatioCheck check = VerifyRatio(run.objective, opt, *ratio);
      rows.push_back({named.id, algorithm, run.objective, opt, *ratio,
                      check.achieved, check.pass && run.feasible});
    }
  }
  return rows;
}

std::vector<NamedInstance> BundledVerifyInstances(uint64_t seed) {
  RngStream rng(seed, Fnv1a64("verify_suite"));
  std::vector<NamedInstance> out;
  for (int i = 0; i < 3; ++i) {
    out.push_back({"sum_" + std::to_string(i),
                   GenSyntheticWeb(10, rng, 3, i == 0 ? 0.5 : 1.0)});
  }
  for (int i = 0; i < 2; ++i) {
    out.push_back({"min_" + std::to_string(i),
                   GenSyntheticWeb(10, rng, 3, 1.0, DiversityKind::kMin)});
  }
  for (int i = 0; i < 2; ++i) {
    out.push_back({"mst_" + std::to_string(i),
                   GenSyntheticWeb(10, rng, 4, 1.0, DiversityKind::kMst)});
  }
  for (int i = 0; i < 2; ++i) {
    out.push_back({"partition_" + std::to_string(i),
                   GenPartitionInstance(12, 2 + i, 4, 1.0, rng)});
  }
  return out;
}

}  // namespace divopt
