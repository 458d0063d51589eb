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

#include "divopt/quality.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "divopt/errors.h"

namespace divopt {

double QualityOracle::Marginal(const Subset& x, ItemId item) const {
  Subset with = x;
  with.Insert(item);
  return Value(with) - Value(x);
}

ModularQuality::ModularQuality(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] < 0) {
      throw DataError("modular quality: weight " + std::to_string(i) +
                      " must be finite and nonnegative");
    }
  }
}

double ModularQuality::Value(const Subset& x) const {
  double total = 0.0;
  x.ForEachMember([&](ItemId i) { total += weights_[i]; });
  return total;
}

double ModularQuality::Marginal(const Subset& x, ItemId item) const {
  return x.Contains(item) ? 0.0 : weights_[item];
}

Json ModularQuality::ToJson() const {
  return Json{{"kind", "modular"}, {"weights", weights_}};
}

TopPMIQuality::TopPMIQuality(std::vector<std::vector<double>> mi, int p)
    : mi_(std::move(mi)), num_labels_(0), p_(p) {
  if (p_ < 1) throw DataError("top_p_mi quality: p must be positive");
  if (!mi_.empty()) num_labels_ = static_cast<int>(mi_[0].size());
  for (size_t v = 0; v < mi_.size(); ++v) {
    if (static_cast<int>(mi_[v].size()) != num_labels_) {
      throw DataError("top_p_mi quality: ragged mi row " + std::to_string(v));
    }
    for (double value : mi_[v]) {
      if (!std::isfinite(value) || value < 0) {
        throw DataError("top_p_mi quality: mi entries must be nonnegative");
      }
    }
  }
}

double TopPMIQuality::Value(const Subset& x) const {
  const std::vector<ItemId> members = x.Members();
  const size_t take = std::min<size_t>(p_, members.size());
  if (take == 0) return 0.0;
  std::vector<double> column(members.size());
  double total = 0.0;
  for (int l = 0; l < num_labels_; ++l) {
    for (size_t i = 0; i < members.size(); ++i) column[i] = mi_[members[i]][l];
    std::partial_sort(column.begin(), column.begin() + take, column.end(),
                      std::greater<>());
    for (size_t i = 0; i < take; ++i) total += column[i];
  }
  return total;
}

Json TopPMIQuality::ToJson() const {
  return Json{{"kind", "top_p_mi"}, {"p", p_}, {"mi", mi_}};
}

}  // namespace divopt
