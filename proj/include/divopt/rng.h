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

#ifndef DIVOPT_RNG_H_
#define DIVOPT_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace divopt {

// 64-bit FNV-1a. Stable across platforms, unlike std::hash.
constexpr uint64_t Fnv1a64(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stream id for one (trial, algorithm) cell of an experiment.
constexpr uint64_t StreamId(uint64_t trial, std::string_view algorithm) {
  return SplitMix64(trial ^ SplitMix64(Fnv1a64(algorithm)));
}

// A seeded random stream. Identical (seed, stream) pairs produce identical
// draw sequences within one build; the distributions come from <random>, so
// sequences are not promised across standard libraries.
class RngStream {
 public:
  using result_type = std::mt19937_64::result_type;

  RngStream(uint64_t seed, uint64_t stream)
      : seed_(seed),
        stream_(stream),
        engine_(SplitMix64(seed ^ SplitMix64(stream + 0x632be59bd9b4e019ull))) {}

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  // A child stream, independent of this one's position.
  RngStream Fork(uint64_t child) const {
    return RngStream(SplitMix64(seed_ ^ stream_), SplitMix64(child));
  }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform integer in [0, bound).
  int UniformInt(int bound) {
    return std::uniform_int_distribution<int>(0, bound - 1)(engine_);
  }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  bool Bernoulli(double p) { return std::bernoulli_distribution(p)(engine_); }

 private:
  uint64_t seed_;
  uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace divopt

#endif  // DIVOPT_RNG_H_
