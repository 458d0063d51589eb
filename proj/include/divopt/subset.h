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

#ifndef DIVOPT_SUBSET_H_
#define DIVOPT_SUBSET_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace divopt {

// Dense index of an item of the ground set, in [0, n).
using ItemId = int;

// A subset of the ground set {0, ..., n-1} stored as a bit vector with a
// cached cardinality. Inserting a present item or removing an absent one is a
// no-op. Out-of-range indices throw std::out_of_range.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n);
  Subset(int n, const std::vector<ItemId>& members);

  int universe_size() const { return n_; }
  int size() const { return cardinality_; }
  bool empty() const { return cardinality_ == 0; }

  void Insert(ItemId item);
  void Remove(ItemId item);
  // Toggles membership of `item`.
  void Flip(ItemId item);
  bool Contains(ItemId item) const;

  // Members in ascending index order.
  std::vector<ItemId> Members() const;

  template <typename Fn>
  void ForEachMember(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t word = words_[w];
      while (word != 0) {
        int bit = std::countr_zero(word);
        fn(static_cast<ItemId>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }

  template <typename Fn>
  void ForEachNonMember(Fn&& fn) const {
    for (ItemId i = 0; i < n_; ++i) {
      if (!TestBit(i)) fn(i);
    }
  }

  // Recomputes the popcount from the bits; equals size() for a valid object.
  int RecountCardinality() const;

  // e.g. "{0,2,5}".
  std::string ToString() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  bool TestBit(ItemId item) const {
    return (words_[item >> 6] >> (item & 63)) & 1u;
  }
  void CheckIndex(ItemId item) const;

  int n_ = 0;
  int cardinality_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace divopt

#endif  // DIVOPT_SUBSET_H_
