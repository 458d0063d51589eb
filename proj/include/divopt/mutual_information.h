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
// Plug-in (empirical frequency) entropy and mutual information estimates for
// discrete columns, used to build multi-label feature-selection instances.
// Natural logarithms throughout; every quantity exposed is a ratio and hence
// base independent.
//

#ifndef DIVOPT_MUTUAL_INFORMATION_H_
#define DIVOPT_MUTUAL_INFORMATION_H_

#include <filesystem>
#include <vector>

#include "divopt/distance_matrix.h"

namespace divopt {

// A column of m discrete observations.
using DiscreteColumn = std::vector<long long>;

double Entropy(const DiscreteColumn& a);
double JointEntropy(const DiscreteColumn& a, const DiscreteColumn& b);
double MutualInformation(const DiscreteColumn& a, const DiscreteColumn& b);

struct FeatureLabelStatistics {
  // mi[v][l] = I(v,l) / sqrt(H(v) H(l)), or 0 when either entropy is 0.
  std::vector<std::vector<double>> mi;
  // 1 - I(vi,vj) / H(vi,vj); 0 on the diagonal and when H(vi,vj) = 0.
  DistanceMatrix feature_distance;
};

// Throws DataError when columns differ in length or there are no samples.
FeatureLabelStatistics NormalizedMIFromData(
    const std::vector<DiscreteColumn>& features,
    const std::vector<DiscreteColumn>& labels);

// Reads a delimiter-separated integer table (one row per sample; commas,
// semicolons, tabs or spaces) and returns its columns. A first row with any
// non-numeric cell is treated as a header and skipped.
std::vector<DiscreteColumn> ReadDiscreteTable(const std::filesystem::path& path);

}  // namespace divopt

#endif  // DIVOPT_MUTUAL_INFORMATION_H_
