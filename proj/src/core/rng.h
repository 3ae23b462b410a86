// Copyright 2026 The Bingo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BINGO_CORE_RNG_H_
#define BINGO_CORE_RNG_H_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>

namespace bingo {

// Anything that can hand out the two kinds of draws the samplers consume.
template <class T>
concept UniformSource = requires(T& source, std::size_t n) {
  { source.uniform_index(n) } -> std::convertible_to<std::size_t>;
  { source.uniform_real() } -> std::convertible_to<double>;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Independent substream for (seed, stream id); used for per-walker streams
  // so results do not depend on thread scheduling.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(seed ^ splitmix64(stream_id + 0x632be59bd9b4e019ULL));
  }

  // Uniform in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bingo

#endif  // BINGO_CORE_RNG_H_
