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

#include "divopt/generators.h"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace divopt {

namespace {

std::shared_ptr<ModularQuality> RandomWeights(int n, RngStream& rng) {
  std::vector<double> w(n);
  for (double& x : w) x = rng.Uniform(0.0, 1.0);
  return std::make_shared<ModularQuality>(std::move(w));
}

std::shared_ptr<DistanceMatrix> RandomDistances(int n, RngStream& rng) {
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double x = rng.Uniform(1.0, 2.0);
      d[static_cast<size_t>(u) * n + v] = x;
      d[static_cast<size_t>(v) * n + u] = x;
    }
  }
  return std::make_shared<DistanceMatrix>(n, std::move(d));
}

}  // namespace

Instance GenSyntheticWeb(int n, uint64_t seed, int k, double lambda,
                         DiversityKind diversity, CardinalityMode mode) {
  RngStream rng(seed, Fnv1a64("synthetic_web"));
  return GenSyntheticWeb(n, rng, k, lambda, diversity, mode);
}

Instance GenSyntheticWeb(int n, RngStream& rng, int k, double lambda,
                         DiversityKind diversity, CardinalityMode mode) {
  if (n < 2) throw std::invalid_argument("GenSyntheticWeb: n must be >= 2");
  auto weights = RandomWeights(n, rng);
  auto distances = RandomDistances(n, rng);
  return Instance(std::move(weights), std::move(distances), lambda,
                  UniformConstraint{k, mode}, diversity);
}

Instance GenPartitionInstance(int n, int num_parts, int max_rank,
                              double lambda, RngStream& rng) {
  if (num_parts < 1 || num_parts > n || max_rank < num_parts) {
    throw std::invalid_argument("GenPartitionInstance: need 1 <= parts <= n "
                                "and parts <= max_rank");
  }
  auto weights = RandomWeights(n, rng);
  auto distances = RandomDistances(n, rng);

  std::vector<ItemId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<ItemId>> parts(num_parts);
  for (int i = 0; i < n; ++i) {
    // The first num_parts items seed one part each, so no part is empty.
    const int p = i < num_parts ? i : rng.UniformInt(num_parts);
    parts[p].push_back(order[i]);
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());

  std::vector<int> caps(num_parts);
  for (int p = 0; p < num_parts; ++p) {
    caps[p] = 1 + rng.UniformInt(static_cast<int>(parts[p].size()));
  }
  int rank = std::accumulate(caps.begin(), caps.end(), 0);
  while (rank > max_rank) {
    const auto it = std::max_element(caps.begin(), caps.end());
    --*it;
    --rank;
  }
  return Instance(std::move(weights), std::move(distances), lambda,
                  PartitionConstraint(n, std::move(parts), std::move(caps)),
                  DiversityKind::kSum);
}

}  // namespace divopt
