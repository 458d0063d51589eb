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

#include "divopt/constraint.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "divopt/errors.h"

namespace divopt {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

PartitionConstraint::PartitionConstraint(int n,
                                         std::vector<std::vector<ItemId>> parts,
                                         std::vector<int> caps)
    : parts_(std::move(parts)), caps_(std::move(caps)), part_of_(n, -1) {
  if (parts_.size() != caps_.size()) {
    throw DataError("partition constraint: " + std::to_string(parts_.size()) +
                    " parts but " + std::to_string(caps_.size()) + " caps");
  }
  for (size_t p = 0; p < parts_.size(); ++p) {
    if (caps_[p] < 0) throw DataError("partition constraint: negative cap");
    for (ItemId item : parts_[p]) {
      if (item < 0 || item >= n) {
        throw DataError("partition constraint: item " + std::to_string(item) +
                        " out of range");
      }
      if (part_of_[item] != -1) {
        throw DataError("partition constraint: item " + std::to_string(item) +
                        " in two parts");
      }
      part_of_[item] = static_cast<int>(p);
    }
  }
  for (ItemId i = 0; i < n; ++i) {
    if (part_of_[i] == -1) {
      throw DataError("partition constraint: item " + std::to_string(i) +
                      " not covered");
    }
  }
}

std::vector<int> PartitionConstraint::Counts(const Subset& x) const {
  std::vector<int> counts(parts_.size(), 0);
  x.ForEachMember([&](ItemId i) { ++counts[part_of_[i]]; });
  return counts;
}

bool IsIndependent(const Subset& x, const ConstraintSpec& c) {
  return std::visit(
      Overloaded{
          [&](const UniformConstraint& u) { return x.size() <= u.k; },
          [&](const PartitionConstraint& p) {
            std::vector<int> counts = p.Counts(x);
            for (size_t i = 0; i < counts.size(); ++i) {
              if (counts[i] > p.caps()[i]) return false;
            }
            return true;
          },
      },
      c);
}

bool IsFeasibleFinal(const Subset& x, const ConstraintSpec& c) {
  if (!IsIndependent(x, c)) return false;
  if (const auto* u = std::get_if<UniformConstraint>(&c)) {
    if (u->mode == CardinalityMode::kExact) return x.size() == u->k;
  }
  return true;
}

int Rank(const ConstraintSpec& c) {
  return std::visit(
      Overloaded{
          [](const UniformConstraint& u) { return u.k; },
          [](const PartitionConstraint& p) {
            int r = 0;
            for (size_t i = 0; i < p.parts().size(); ++i) {
              r += std::min(static_cast<int>(p.parts()[i].size()), p.caps()[i]);
            }
            return r;
          },
      },
      c);
}

bool SwapKeepsIndependent(const Subset& x, ItemId out, ItemId in,
                          const ConstraintSpec& c) {
  if (std::holds_alternative<UniformConstraint>(c)) return true;
  const auto& p = std::get<PartitionConstraint>(c);
  const int target = p.part_of(in);
  if (p.part_of(out) == target) return true;
  int count = 0;
  for (ItemId i : p.parts()[target]) {
    if (x.Contains(i)) ++count;
  }
  return count < p.caps()[target];
}

Subset ExtendToBasis(const Subset& x, const ConstraintSpec& c,
                     const std::vector<ItemId>& order) {
  if (!IsIndependent(x, c)) {
    throw std::invalid_argument("ExtendToBasis: input is not independent");
  }
  std::vector<ItemId> scan = order;
  if (scan.empty()) {
    scan.resize(x.universe_size());
    std::iota(scan.begin(), scan.end(), 0);
  }
  Subset out = x;
  const int rank = Rank(c);
  for (ItemId item : scan) {
    if (out.size() >= rank) break;
    if (out.Contains(item)) continue;
    out.Insert(item);
    if (!IsIndependent(out, c)) out.Remove(item);
  }
  return out;
}

bool IsBasis(const Subset& x, const ConstraintSpec& c) {
  return IsIndependent(x, c) && x.size() == Rank(c);
}

std::vector<Swap> FeasibleSwaps(const Subset& x, const ConstraintSpec& c) {
  if (!IsBasis(x, c)) {
    throw std::invalid_argument("FeasibleSwaps: input is not a basis");
  }
  std::vector<Swap> swaps;
  const std::vector<ItemId> members = x.Members();
  std::vector<int> slack;
  const auto* partition = std::get_if<PartitionConstraint>(&c);
  if (partition != nullptr) {
    std::vector<int> counts = partition->Counts(x);
    slack.resize(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) {
      slack[i] = partition->caps()[i] - counts[i];
    }
  }
  for (ItemId out : members) {
    x.ForEachNonMember([&](ItemId in) {
      if (partition != nullptr) {
        const int part = partition->part_of(in);
        if (part != partition->part_of(out) && slack[part] <= 0) return;
      }
      swaps.push_back({out, in});
    });
  }
  return swaps;
}

}  // namespace divopt
