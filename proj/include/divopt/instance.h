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

#ifndef DIVOPT_INSTANCE_H_
#define DIVOPT_INSTANCE_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "divopt/constraint.h"
#include "divopt/distance_matrix.h"
#include "divopt/json_fwd.h"
#include "divopt/quality.h"

namespace divopt {

enum class DiversityKind { kSum, kMin, kMst };

std::string_view DiversityKindName(DiversityKind kind);
DiversityKind ParseDiversityKind(std::string_view name);

// One optimization problem: maximize f(X) + lambda * div(X) subject to the
// constraint. Immutable; the quality oracle and distance matrix are shared
// between copies, so instances are cheap to copy and safe to read from many
// threads.
class Instance {
 public:
  // Validates: lambda >= 0; oracle, matrix and constraint agree on n; min/mst
  // diversity needs an exact cardinality constraint with 2 <= k; uniform
  // k <= n. Throws DataError.
  Instance(std::shared_ptr<const QualityOracle> quality,
           std::shared_ptr<const DistanceMatrix> distance, double lambda,
           ConstraintSpec constraint, DiversityKind diversity,
           std::vector<std::string> names = {});

  int n() const { return distance_->size(); }
  const QualityOracle& quality() const { return *quality_; }
  const std::shared_ptr<const QualityOracle>& quality_ptr() const {
    return quality_;
  }
  const DistanceMatrix& distance() const { return *distance_; }
  const std::shared_ptr<const DistanceMatrix>& distance_ptr() const {
    return distance_;
  }
  double lambda() const { return lambda_; }
  const ConstraintSpec& constraint() const { return constraint_; }
  DiversityKind diversity() const { return diversity_; }
  // Optional external item names, index-aligned. Empty when absent.
  const std::vector<std::string>& names() const { return names_; }

  bool is_cardinality() const {
    return std::holds_alternative<UniformConstraint>(constraint_);
  }
  // k of a cardinality constraint; the matroid rank otherwise.
  int k() const;

  // Copies with one component replaced; revalidated.
  Instance WithQuality(std::shared_ptr<const QualityOracle> quality) const;
  Instance WithDistance(std::shared_ptr<const DistanceMatrix> distance) const;
  Instance WithLambda(double lambda) const;
  Instance WithConstraint(ConstraintSpec constraint) const;

 private:
  std::shared_ptr<const QualityOracle> quality_;
  std::shared_ptr<const DistanceMatrix> distance_;
  double lambda_;
  ConstraintSpec constraint_;
  DiversityKind diversity_;
  std::vector<std::string> names_;
};

// Instance file (JSON). Schema:
//   n, lambda, diversity ("sum"|"min"|"mst"),
//   quality: {"kind":"modular","weights":[...]} |
//            {"kind":"top_p_mi","p":int,"mi":[[...] per item] or flat n*L},
//   distance: {"kind":"dense","values":[n*n row-major]},
//   constraint: {"kind":"cardinality","k":int,"mode":"at_most"|"exact"} |
//               {"kind":"partition","parts":[[ids]],"caps":[ints]},
//   names (optional): [strings]; partition parts may then use names.
// Schema violations and inconsistencies throw DataError.
Instance InstanceFromJson(const Json& doc);
Json InstanceToJson(const Instance& instance);

Instance LoadInstance(const std::filesystem::path& path);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);

// Structural equality: same n, lambda, diversity, constraint, quality and
// distance values.
bool SameInstance(const Instance& a, const Instance& b);

}  // namespace divopt

#endif  // DIVOPT_INSTANCE_H_
