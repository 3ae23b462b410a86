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

#ifndef BINGO_CORE_BIAS_H_
#define BINGO_CORE_BIAS_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bingo {

// Width of the integer bias, and therefore the number of radix groups.
inline constexpr int kRadixBits = 64;

enum class BiasMode : std::uint8_t { kInteger, kFloat };

// A bias after lambda scaling: the integer part feeds the radix groups, the
// residual feeds the decimal group.
struct BiasValue {
  std::uint64_t integer_part = 0;
  double residual = 0.0;
};

// Radix positions k with bit k of w set, ascending.
std::vector<int> decompose_bias(std::uint64_t w);

// Calls fn(k) for every set bit k of w, ascending.
template <class Fn>
inline void for_each_radix(std::uint64_t w, Fn&& fn) {
  while (w != 0) {
    fn(std::countr_zero(w));
    w &= w - 1;
  }
}

// floor(w * lambda) and its fractional remainder. Throws kLambdaOverflow when
// w * lambda does not fit in 64 bits and kInvalidBias for non-positive or
// non-finite input.
BiasValue scale_float_bias(double w, double lambda);

// Validates an integer-mode bias and converts it. Throws kZeroBias for 0 and
// kInvalidBias for negative, fractional or out-of-range values.
std::uint64_t integer_bias(double w);

struct LambdaChoice {
  double lambda = 1.0;
  // False when no candidate up to 1e9 keeps the residual mass below 1/d of the
  // total. Sampling stays exact in that case; only the time bound degrades.
  bool constraint_met = true;
};

// Smallest lambda in {1, 10, ..., 1e9} with W_D / (W_I + W_D) < 1/d, where d is
// biases.size(). Throws kInvalidBias on non-positive or non-finite input.
LambdaChoice choose_lambda(std::span<const double> biases);

// Residual share W_D / (W_I + W_D) for the given lambda.
double residual_fraction(std::span<const double> biases, double lambda);

enum class GroupKind : std::uint8_t {
  kDense = 0,
  kOneElement = 1,
  kSparse = 2,
  kRegular = 3,
  kDecimal = 4,
};

inline constexpr int kConvertibleKinds = 4;

const char* group_kind_name(GroupKind kind);

// Cardinality thresholds in percent of the degree, 0 < beta < alpha < 100.
struct GroupThresholds {
  unsigned alpha = 40;
  unsigned beta = 10;
};

// One-element first, then dense (> alpha%), sparse (< beta%), else regular.
GroupKind classify_group(std::size_t group_size, std::size_t degree,
                         GroupThresholds thresholds = {});

}  // namespace bingo

#endif  // BINGO_CORE_BIAS_H_
