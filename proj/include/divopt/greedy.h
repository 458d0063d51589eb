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
// Greedy algorithms for the three diversity measures. All of them take k from
// the instance's cardinality constraint, break ties toward the lowest index,
// and charge one evaluation per scanned candidate. The trace has one point
// per greedy step.
//

#ifndef DIVOPT_GREEDY_H_
#define DIVOPT_GREEDY_H_

#include "divopt/instance.h"
#include "divopt/run.h"

namespace divopt {

// Non-oblivious greedy for sum-diversity: each step adds the item maximizing
// (f(X+u) - f(X)) / 2 + lambda * sum_{v in X} d(u,v). Returns X_k with its
// true objective f + lambda * sum-div.
RunResult GreedySum(const Instance& instance);

// Runs the quality chain (argmax f-gain) and the dispersion chain (argmax
// distance to the chain) side by side for k steps and returns the better of
// the two under f + lambda * min-div; X_k wins ties. The dispersion chain
// starts from item 0, since the farthest point from an empty set is not
// defined.
RunResult GreedyMin(const Instance& instance);

// Each step adds the item maximizing f-gain + lambda * min_{v in X} d(u,v),
// with the minimum over an empty X taken as 0. Returns X_k with its true
// objective f + lambda * mst-div.
RunResult GreedyMst(const Instance& instance);

}  // namespace divopt

#endif  // DIVOPT_GREEDY_H_
