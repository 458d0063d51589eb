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

#include "divopt/diversity.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace divopt {

double SumDiversity(const Subset& x, const DistanceMatrix& d) {
  const std::vector<ItemId> items = x.Members();
  double total = 0.0;
  for (size_t i = 0; i < items.size(); ++i) {
    const auto row = d.Row(items[i]);
    for (size_t j = i + 1; j < items.size(); ++j) total += row[items[j]];
  }
  return total;
}

double SumDiversityMarginal(const Subset& x, ItemId item,
                            const DistanceMatrix& d) {
  if (x.Contains(item)) {
    throw std::invalid_argument("SumDiversityMarginal: item already in set");
  }
  const auto row = d.Row(item);
  double total = 0.0;
  x.ForEachMember([&](ItemId v) { total += row[v]; });
  return total;
}

DiversityValue MinDiversity(const Subset& x, const DistanceMatrix& d) {
  if (x.size() <= 1) return DiversityValue::Infinity();
  const std::vector<ItemId> items = x.Members();
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < items.size(); ++i) {
    const auto row = d.Row(items[i]);
    for (size_t j = i + 1; j < items.size(); ++j) {
      best = std::min(best, row[items[j]]);
    }
  }
  return DiversityValue(best);
}

double MstDiversity(std::span<const ItemId> items, const DistanceMatrix& d) {
  const size_t m = items.size();
  if (m <= 1) return 0.0;
  // Dense Prim: attach[i] is the cheapest edge from items[i] into the tree.
  std::vector<double> attach(m, std::numeric_limits<double>::infinity());
  std::vector<bool> in_tree(m, false);
  attach[0] = 0.0;
  double weight = 0.0;
  for (size_t step = 0; step < m; ++step) {
    size_t next = m;
    for (size_t i = 0; i < m; ++i) {
      if (!in_tree[i] && (next == m || attach[i] < attach[next])) next = i;
    }
    in_tree[next] = true;
    weight += attach[next];
    const auto row = d.Row(items[next]);
    for (size_t i = 0; i < m; ++i) {
      if (!in_tree[i]) attach[i] = std::min(attach[i], row[items[i]]);
    }
  }
  return weight;
}

double MstDiversity(const Subset& x, const DistanceMatrix& d) {
  const std::vector<ItemId> items = x.Members();
  return MstDiversity(items, d);
}

double PermutationMstProxy(std::span<const ItemId> perm,
                           const DistanceMatrix& d) {
  std::vector<ItemId> seen(perm.begin(), perm.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("PermutationMstProxy: duplicate item");
  }
  double total = 0.0;
  for (size_t i = 1; i < perm.size(); ++i) {
    const auto row = d.Row(perm[i]);
    double nearest = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < i; ++j) nearest = std::min(nearest, row[perm[j]]);
    total += nearest;
  }
  return total;
}

}  // namespace divopt
