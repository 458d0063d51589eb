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

#include "divopt/objective.h"

#include "divopt/diversity.h"

namespace divopt {

double DiversityTerm(const Subset& x, const Instance& instance) {
  switch (instance.diversity()) {
    case DiversityKind::kSum:
      return SumDiversity(x, instance.distance());
    case DiversityKind::kMin: {
      DiversityValue v = MinDiversity(x, instance.distance());
      return v.is_infinite() ? 0.0 : v.value();
    }
    case DiversityKind::kMst:
      return MstDiversity(x, instance.distance());
  }
  return 0.0;
}

double Objective(const Subset& x, const Instance& instance) {
  double value = instance.quality().Value(x);
  if (instance.lambda() != 0.0) {
    value += instance.lambda() * DiversityTerm(x, instance);
  }
  return value;
}

ObjectiveValue EvaluateObjective(const Subset& x, const Instance& instance,
                                 EvaluationCounter* counter) {
  if (counter != nullptr) counter->Charge(1);
  return {Objective(x, instance), IsFeasibleFinal(x, instance.constraint())};
}

}  // namespace divopt
