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

#ifndef DIVOPT_DIVERSITY_H_
#define DIVOPT_DIVERSITY_H_

#include <span>

#include "divopt/distance_matrix.h"
#include "divopt/extended_real.h"
#include "divopt/subset.h"

namespace divopt {

using DiversityValue = ExtendedReal;

// Sum of d(u,v) over unordered pairs in x; 0 when |x| <= 1.
double SumDiversity(const Subset& x, const DistanceMatrix& d);

// sum_{v in x} d(item, v). Throws std::invalid_argument if item is in x.
double SumDiversityMarginal(const Subset& x, ItemId item,
                            const DistanceMatrix& d);

// Minimum pairwise distance; +infinity for |x| <= 1.
DiversityValue MinDiversity(const Subset& x, const DistanceMatrix& d);

// Weight of a minimum spanning tree of the complete graph on x (dense Prim,
// O(|x|^2)); 0 for |x| <= 1.
double MstDiversity(const Subset& x, const DistanceMatrix& d);
double MstDiversity(std::span<const ItemId> items, const DistanceMatrix& d);

// sum over i >= 1 of min_{j < i} d(perm[i], perm[j]). Upper-bounds the MST
// weight of the items by at most a log2(|perm|) factor. Throws
// std::invalid_argument on duplicates.
double PermutationMstProxy(std::span<const ItemId> perm,
                           const DistanceMatrix& d);

}  // namespace divopt

#endif  // DIVOPT_DIVERSITY_H_
