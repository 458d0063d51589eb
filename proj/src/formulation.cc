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

#include "divopt/formulation.h"

#include <stdexcept>
#include <string>

#include "divopt/diversity.h"

namespace divopt {

namespace {

constexpr std::pair<Formulation, std::string_view> kNames[] = {
    {Formulation::kScaledCardinalitySum, "scaled_sum"},
    {Formulation::kPlainCardinalitySum, "plain_sum"},
    {Formulation::kMinQualityPhase, "min_quality"},
    {Formulation::kMinDiversityPhase, "min_diversity"},
    {Formulation::kMstPermutation, "mst_permutation"},
    {Formulation::kMatroidSum, "matroid_sum"},
};

bool IsCardinalityFormulation(Formulation form) {
  return form != Formulation::kMatroidSum;
}

// Appends the lowest-index non-members of `x` until it has k items.
void PadToK(Subset& x, std::vector<ItemId>* perm, int k) {
  for (ItemId i = 0; i < x.universe_size() && x.size() < k; ++i) {
    if (x.Contains(i)) continue;
    x.Insert(i);
    if (perm != nullptr) perm->push_back(i);
  }
}

FinalSolution MakeFinal(Subset subset, std::vector<ItemId> perm,
                        const Instance& instance) {
  FinalSolution out;
  out.objective = Objective(subset, instance);
  out.feasible = IsFeasibleFinal(subset, instance.constraint());
  out.subset = std::move(subset);
  out.perm = std::move(perm);
  return out;
}

size_t LargestMember(std::span<const Individual> population) {
  size_t best = 0;
  for (size_t i = 1; i < population.size(); ++i) {
    if (population[i].subset.size() > population[best].subset.size()) best = i;
  }
  return best;
}

}  // namespace

std::string_view FormulationName(Formulation form) {
  for (const auto& [f, name] : kNames) {
    if (f == form) return name;
  }
  return "?";
}

Formulation ParseFormulation(std::string_view name) {
  for (const auto& [f, known] : kNames) {
    if (known == name) return f;
  }
  throw std::invalid_argument("unknown formulation '" + std::string(name) +
                              "'");
}

Dominance Dominates(const BiObjectiveValue& a, const BiObjectiveValue& b) {
  Dominance d;
  const bool a_over_b = a.f1 >= b.f1 && a.f2 >= b.f2;
  const bool b_over_a = b.f1 >= a.f1 && b.f2 >= a.f2;
  d.weak = a_over_b;
  d.strict = a_over_b && (a.f1 > b.f1 || a.f2 > b.f2);
  d.incomparable = !a_over_b && !b_over_a;
  return d;
}

BiObjectiveValue Evaluate(Formulation form, const Subset& x,
                          const std::vector<ItemId>* perm,
                          const Instance& instance,
                          EvaluationCounter* counter) {
  if (counter != nullptr) counter->Charge(1);
  const double size = static_cast<double>(x.size());
  const double lambda = instance.lambda();
  BiObjectiveValue v;
  switch (form) {
    case Formulation::kScaledCardinalitySum: {
      const int k = instance.k();
      const double scale = 0.5 * (1.0 + (k > 0 ? size / k : 0.0));
      v.f1 = ExtendedReal(scale * instance.quality().Value(x) +
                          lambda * DiversityTerm(x, instance));
      v.f2 = -size;
      break;
    }
    case Formulation::kPlainCardinalitySum:
      v.f1 = ExtendedReal(Objective(x, instance));
      v.f2 = -size;
      break;
    case Formulation::kMinQualityPhase:
      v.f1 = ExtendedReal(instance.quality().Value(x));
      v.f2 = -size;
      break;
    case Formulation::kMinDiversityPhase:
      v.f1 = MinDiversity(x, instance.distance());
      v.f2 = size;
      break;
    case Formulation::kMstPermutation: {
      if (perm == nullptr) {
        throw std::invalid_argument("mst_permutation needs a permutation");
      }
      if (static_cast<int>(perm->size()) != x.size()) {
        throw std::invalid_argument("permutation does not match the subset");
      }
      v.f1 = ExtendedReal(instance.quality().Value(x) +
                          lambda * PermutationMstProxy(*perm,
                                                       instance.distance()));
      v.f2 = -size;
      break;
    }
    case Formulation::kMatroidSum:
      v.f1 = ExtendedReal(instance.quality().Value(x) +
                          lambda * DiversityTerm(x, instance));
      v.f2 = size;
      break;
  }
  return v;
}

bool OffspringFeasible(Formulation form, const Subset& x,
                       const Instance& instance) {
  if (IsCardinalityFormulation(form)) return x.size() <= instance.k();
  return IsIndependent(x, instance.constraint());
}

std::vector<ItemId> MutatePermutation(std::span<const ItemId> parent_perm,
                                      const Subset& offspring) {
  std::vector<ItemId> out;
  out.reserve(offspring.size());
  Subset kept(offspring.universe_size());
  for (ItemId item : parent_perm) {
    if (offspring.Contains(item)) {
      out.push_back(item);
      kept.Insert(item);
    }
  }
  offspring.ForEachMember([&](ItemId item) {
    if (!kept.Contains(item)) out.push_back(item);
  });
  return out;
}

FinalSolution ExtractFinal(Formulation form,
                           std::span<const Individual> population,
                           const Instance& instance) {
  if (population.empty()) {
    throw std::invalid_argument("ExtractFinal: empty population");
  }
  const int k = instance.k();
  switch (form) {
    case Formulation::kScaledCardinalitySum:
    case Formulation::kPlainCardinalitySum:
    case Formulation::kMatroidSum: {
      std::optional<FinalSolution> best;
      std::optional<FinalSolution> fallback;
      for (const Individual& ind : population) {
        if (!OffspringFeasible(form, ind.subset, instance)) continue;
        FinalSolution candidate = MakeFinal(ind.subset, {}, instance);
        auto& slot = candidate.feasible ? best : fallback;
        if (!slot || candidate.objective > slot->objective) {
          slot = std::move(candidate);
        }
      }
      if (best) return *best;
      if (fallback) return *fallback;
      return MakeFinal(population.front().subset, {}, instance);
    }
    case Formulation::kMinQualityPhase: {
      Subset x = population[LargestMember(population)].subset;
      PadToK(x, nullptr, k);
      return MakeFinal(std::move(x), {}, instance);
    }
    case Formulation::kMinDiversityPhase: {
      for (const Individual& ind : population) {
        if (ind.subset.size() == k) return MakeFinal(ind.subset, {}, instance);
      }
      return MakeFinal(population[LargestMember(population)].subset, {},
                       instance);
    }
    case Formulation::kMstPermutation: {
      const Individual& largest = population[LargestMember(population)];
      Subset x = largest.subset;
      std::vector<ItemId> perm =
          largest.perm ? *largest.perm : largest.subset.Members();
      PadToK(x, &perm, k);
      return MakeFinal(std::move(x), std::move(perm), instance);
    }
  }
  throw std::logic_error("ExtractFinal: unhandled formulation");
}

}  // namespace divopt
