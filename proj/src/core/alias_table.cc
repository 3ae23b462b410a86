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

#include "core/alias_table.h"

#include <cmath>

#include "core/error.h"

namespace bingo {

void AliasTable::assign(std::span<const double> biases) {
  if (biases.empty()) {
    throw Error(ErrorCode::kDegenerate, "degenerate distribution: no biases");
  }
  double total = 0.0;
  for (double w : biases) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kInvalidBias, "invalid bias");
    }
    total += w;
  }
  if (total <= 0.0) {
    throw Error(ErrorCode::kDegenerate, "degenerate distribution");
  }

  const std::size_t n = biases.size();
  prob_.resize(n);
  alias_.resize(n);
  total_ = total;

  // Worklists are FIFO over ascending indices; scratch is per thread so the
  // streaming path does not allocate once warmed up.
  thread_local std::vector<std::uint32_t> small;
  thread_local std::vector<std::uint32_t> large;
  small.clear();
  large.clear();

  const double scale = static_cast<double>(n) / total;
  for (std::size_t i = 0; i < n; ++i) {
    prob_[i] = biases[i] * scale;
    alias_[i] = static_cast<std::uint32_t>(i);
    if (prob_[i] < 1.0) {
      small.push_back(static_cast<std::uint32_t>(i));
    } else {
      large.push_back(static_cast<std::uint32_t>(i));
    }
  }

  std::size_t s = 0;
  std::size_t l = 0;
  while (s < small.size() && l < large.size()) {
    const std::uint32_t less = small[s++];
    const std::uint32_t more = large[l];
    alias_[less] = more;
    prob_[more] = (prob_[more] + prob_[less]) - 1.0;
    if (prob_[more] < 1.0) {
      ++l;
      small.push_back(more);
    }
  }
  // Whatever remains is full up to rounding error.
  for (; l < large.size(); ++l) prob_[large[l]] = 1.0;
  for (; s < small.size(); ++s) prob_[small[s]] = 1.0;
}

void AliasTable::clear() {
  prob_.clear();
  alias_.clear();
  total_ = 0.0;
}

std::vector<double> AliasTable::induced_distribution() const {
  const std::size_t n = prob_.size();
  std::vector<double> mass(n, 0.0);
  if (n == 0) return mass;
  const double share = 1.0 / static_cast<double>(n);
  for (std::size_t b = 0; b < n; ++b) {
    mass[b] += prob_[b] * share;
    mass[alias_[b]] += (1.0 - prob_[b]) * share;
  }
  return mass;
}

}  // namespace bingo
