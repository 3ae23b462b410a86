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

#include "core/bias.h"

#include <cmath>
#include <string>

#include "core/error.h"

namespace bingo {
namespace {

constexpr double kTwoPow64 = 18446744073709551616.0;

void check_positive_finite(double w) {
  if (!std::isfinite(w) || w <= 0.0) {
    throw Error(ErrorCode::kInvalidBias,
                "invalid bias " + std::to_string(w) + ": must be positive and finite");
  }
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInvalidBias: return "invalid bias";
    case ErrorCode::kZeroBias: return "zero bias edge";
    case ErrorCode::kDegenerate: return "degenerate distribution";
    case ErrorCode::kLambdaOverflow: return "lambda overflow";
    case ErrorCode::kEmptyVertex: return "empty vertex";
    case ErrorCode::kNoSuchEdge: return "no such edge";
    case ErrorCode::kUnknownVertex: return "unknown vertex";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kInfeasible: return "workload infeasible";
    case ErrorCode::kBinTooSmall: return "bin too small";
  }
  return "unknown error";
}

const char* group_kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::kDense: return "dense";
    case GroupKind::kOneElement: return "one_element";
    case GroupKind::kSparse: return "sparse";
    case GroupKind::kRegular: return "regular";
    case GroupKind::kDecimal: return "decimal";
  }
  return "unknown";
}

std::vector<int> decompose_bias(std::uint64_t w) {
  std::vector<int> positions;
  positions.reserve(static_cast<std::size_t>(std::popcount(w)));
  for_each_radix(w, [&](int k) { positions.push_back(k); });
  return positions;
}

BiasValue scale_float_bias(double w, double lambda) {
  check_positive_finite(w);
  check_positive_finite(lambda);
  const double scaled = w * lambda;
  if (!(scaled < kTwoPow64)) {
    throw Error(ErrorCode::kLambdaOverflow, "lambda overflow");
  }
  const double whole = std::floor(scaled);
  return BiasValue{static_cast<std::uint64_t>(whole), scaled - whole};
}

std::uint64_t integer_bias(double w) {
  if (w == 0.0) throw Error(ErrorCode::kZeroBias, "zero bias edge");
  check_positive_finite(w);
  if (w != std::floor(w) || !(w < kTwoPow64)) {
    throw Error(ErrorCode::kInvalidBias,
                "invalid bias " + std::to_string(w) + ": integer mode needs a whole number below 2^64");
  }
  return static_cast<std::uint64_t>(w);
}

double residual_fraction(std::span<const double> biases, double lambda) {
  double whole = 0.0;
  double residual = 0.0;
  for (double w : biases) {
    const BiasValue v = scale_float_bias(w, lambda);
    whole += static_cast<double>(v.integer_part);
    residual += v.residual;
  }
  const double total = whole + residual;
  return total > 0.0 ? residual / total : 0.0;
}

LambdaChoice choose_lambda(std::span<const double> biases) {
  if (biases.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "choose_lambda needs at least one bias");
  }
  for (double w : biases) check_positive_finite(w);

  const double d = static_cast<double>(biases.size());
  double lambda = 1.0;
  double last_feasible = 0.0;
  for (int exponent = 0; exponent <= 9; ++exponent, lambda *= 10.0) {
    double fraction;
    try {
      fraction = residual_fraction(biases, lambda);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kLambdaOverflow) throw;
      break;
    }
    last_feasible = lambda;
    if (fraction * d < 1.0) return LambdaChoice{lambda, true};
  }
  if (last_feasible == 0.0) {
    throw Error(ErrorCode::kLambdaOverflow, "lambda overflow");
  }
  return LambdaChoice{last_feasible, false};
}

GroupKind classify_group(std::size_t group_size, std::size_t degree,
                         GroupThresholds thresholds) {
  if (group_size == 1) return GroupKind::kOneElement;
  // Integer form of size/degree > alpha% and size/degree < beta%.
  if (100 * group_size > static_cast<std::size_t>(thresholds.alpha) * degree) {
    return GroupKind::kDense;
  }
  if (100 * group_size < static_cast<std::size_t>(thresholds.beta) * degree) {
    return GroupKind::kSparse;
  }
  return GroupKind::kRegular;
}

}  // namespace bingo
