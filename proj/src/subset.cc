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

#include "divopt/subset.h"

#include <stdexcept>

namespace divopt {

Subset::Subset(int n) : n_(n), words_((n + 63) / 64, 0) {
  if (n < 0) throw std::invalid_argument("Subset: negative universe size");
}

Subset::Subset(int n, const std::vector<ItemId>& members) : Subset(n) {
  for (ItemId item : members) Insert(item);
}

void Subset::CheckIndex(ItemId item) const {
  if (item < 0 || item >= n_) {
    throw std::out_of_range("Subset: item " + std::to_string(item) +
                            " outside [0, " + std::to_string(n_) + ")");
  }
}

void Subset::Insert(ItemId item) {
  CheckIndex(item);
  if (TestBit(item)) return;
  words_[item >> 6] |= uint64_t{1} << (item & 63);
  ++cardinality_;
}

void Subset::Remove(ItemId item) {
  CheckIndex(item);
  if (!TestBit(item)) return;
  words_[item >> 6] &= ~(uint64_t{1} << (item & 63));
  --cardinality_;
}

void Subset::Flip(ItemId item) {
  CheckIndex(item);
  if (TestBit(item)) {
    --cardinality_;
  } else {
    ++cardinality_;
  }
  words_[item >> 6] ^= uint64_t{1} << (item & 63);
}

bool Subset::Contains(ItemId item) const {
  CheckIndex(item);
  return TestBit(item);
}

std::vector<ItemId> Subset::Members() const {
  std::vector<ItemId> out;
  out.reserve(cardinality_);
  ForEachMember([&out](ItemId i) { out.push_back(i); });
  return out;
}

int Subset::RecountCardinality() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEachMember([&](ItemId i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace divopt
