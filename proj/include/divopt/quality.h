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
// Quality oracles: normalized monotone submodular set functions.
//

#ifndef DIVOPT_QUALITY_H_
#define DIVOPT_QUALITY_H_

#include <memory>
#include <vector>

#include "divopt/json_fwd.h"
#include "divopt/subset.h"

namespace divopt {

// Inherit from this to define a quality function f with f(empty) = 0.
// Implementations must be immutable after construction; evaluation cost is
// charged by callers through an EvaluationCounter, not by the oracle.
class QualityOracle {
 public:
  virtual ~QualityOracle() = default;

  virtual int size() const = 0;
  virtual double Value(const Subset& x) const = 0;
  // f(x + {item}) - f(x). `item` must not be in x.
  virtual double Marginal(const Subset& x, ItemId item) const;

  // The "quality" block of the instance file.
  virtual Json ToJson() const = 0;
};

// f(X) = sum of per-item weights.
class ModularQuality : public QualityOracle {
 public:
  explicit ModularQuality(std::vector<double> weights);

  int size() const override { return static_cast<int>(weights_.size()); }
  double Value(const Subset& x) const override;
  double Marginal(const Subset& x, ItemId item) const override;
  Json ToJson() const override;

  const std::vector<double>& weights() const { return weights_; }
  double weight(ItemId item) const { return weights_[item]; }

 private:
  std::vector<double> weights_;
};

// Multi-label relevance: f(X) = sum over labels l of the sum of the p largest
// mi[v][l] over v in X (all of them when |X| < p).
class TopPMIQuality : public QualityOracle {
 public:
  // `mi` is n rows of L values each.
  TopPMIQuality(std::vector<std::vector<double>> mi, int p);

  int size() const override { return static_cast<int>(mi_.size()); }
  int num_labels() const { return num_labels_; }
  int p() const { return p_; }
  const std::vector<std::vector<double>>& mi() const { return mi_; }

  double Value(const Subset& x) const override;
  Json ToJson() const override;

 private:
  std::vector<std::vector<double>> mi_;
  int num_labels_;
  int p_;
};

}  // namespace divopt

#endif  // DIVOPT_QUALITY_H_
