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

#ifndef BINGO_CORE_ALIAS_TABLE_H_
#define BINGO_CORE_ALIAS_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "core/rng.h"

namespace bingo {

// Vose alias table over a small categorical distribution. Immutable between
// calls to assign(); concurrent sampling from a const table is safe.
//
// Construction is deterministic: the small and large worklists are seeded in
// ascending index order and a bias exactly at the mean goes to the large list.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> biases) { assign(biases); }

  // Rebuilds the table in place, reusing storage. Throws kDegenerate when every
  // bias is zero and kInvalidBias on a negative or non-finite entry.
  void assign(std::span<const double> biases);

  void clear();

  std::size_t size() const { return prob_.size(); }
  bool empty() const { return prob_.empty(); }
  double total() const { return total_; }
  std::span<const double> prob() const { return prob_; }
  std::span<const std::uint32_t> alias() const { return alias_; }

  // Consumes exactly one uniform_index and one uniform_real draw.
  template <UniformSource Source>
  std::size_t sample(Source& source) const {
    const std::size_t bucket = source.uniform_index(prob_.size());
    const double u = source.uniform_real();
    return u < prob_[bucket] ? bucket : alias_[bucket];
  }

  // Probability of each index, summed over its own bucket and every bucket
  // aliasing to it.
  std::vector<double> induced_distribution() const;

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
  double total_ = 0.0;
};

}  // namespace bingo

#endif  // BINGO_CORE_ALIAS_TABLE_H_
