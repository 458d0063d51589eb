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

// Random instance generators.

#ifndef DIVOPT_GENERATORS_H_
#define DIVOPT_GENERATORS_H_

#include <cstdint>

#include "divopt/instance.h"
#include "divopt/rng.h"

namespace divopt {

// Synthetic web-search instance: modular relevance weights ~ U[0, 1] and
// symmetric distances ~ U[1, 2], so every triangle inequality holds. Uses a
// uniform constraint with the given k and mode. Throws std::invalid_argument
// for n < 2.
Instance GenSyntheticWeb(int n, uint64_t seed, int k, double lambda,
                         DiversityKind diversity = DiversityKind::kSum,
                         CardinalityMode mode = CardinalityMode::kExact);

// Same weights and distances as GenSyntheticWeb, drawn from `rng`.
Instance GenSyntheticWeb(int n, RngStream& rng, int k, double lambda,
                         DiversityKind diversity = DiversityKind::kSum,
                         CardinalityMode mode = CardinalityMode::kExact);

// Synthetic weights and distances under a random partition matroid: items are
// dealt to `num_parts` nonempty parts, and caps are drawn in [1, |part|] and
// then lowered until the rank is at most `max_rank`. Sum-diversity.
Instance GenPartitionInstance(int n, int num_parts, int max_rank,
                              double lambda, RngStream& rng);

}  // namespace divopt

#endif  // DIVOPT_GENERATORS_H_
