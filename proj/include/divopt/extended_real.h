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

#ifndef DIVOPT_EXTENDED_REAL_H_
#define DIVOPT_EXTENDED_REAL_H_

#include <compare>
#include <string>

namespace divopt {

// A real number or an explicit +infinity tag. The tag never leaks into the
// floating-point payload, so +infinity serializes unambiguously and compares
// equal to itself and greater than every finite value.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double value) : value_(value) {}

  static constexpr ExtendedReal Infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  // Finite payload; 0 for the infinite tag.
  constexpr double value() const { return infinite_ ? 0.0 : value_; }

  friend constexpr bool operator==(const ExtendedReal& a,
                                   const ExtendedReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(const ExtendedReal& a,
                                                     const ExtendedReal& b) {
    if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
    if (a.infinite_) return std::partial_ordering::greater;
    if (b.infinite_) return std::partial_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string ToString() const;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace divopt

#endif  // DIVOPT_EXTENDED_REAL_H_
