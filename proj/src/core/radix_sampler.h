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

#ifndef BINGO_CORE_RADIX_SAMPLER_H_
#define BINGO_CORE_RADIX_SAMPLER_H_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "core/alias_table.h"
#include "core/bias.h"
#include "core/block_pool.h"
#include "core/error.h"
#include "core/rng.h"

namespace bingo {

using VertexId = std::uint32_t;

struct SamplerOptions {
  BiasMode mode = BiasMode::kInteger;
  // When false every group is kept in the regular representation.
  bool adaptive = true;
  GroupThresholds thresholds;
};

struct Neighbor {
  VertexId id = 0;
  double bias = 1.0;
  std::uint64_t seq = 0;
};

// Streaming updates rebuild the inter-group table immediately; batch updates
// leave it stale until rebuild().
enum class UpdateMode : std::uint8_t { kStreaming, kBatch };

// Work done by one update, for the O(K) bound checks.
struct UpdateCost {
  // Distinct groups (radix groups plus the decimal group) whose storage changed.
  std::uint32_t group_mutations = 0;
  // Buckets in the rebuilt inter-group table, 0 when deferred.
  std::uint32_t alias_buckets = 0;
  // Neighbor-list entries scanned to materialize a dense group's last member.
  std::uint32_t neighbor_scans = 0;
};

struct EraseResult {
  UpdateCost cost;
  // Old index of the neighbor moved into the erased slot, if any.
  std::optional<std::uint32_t> moved_from;
};

// transitions[from][to] over the four convertible kinds.
struct GroupTransitions {
  std::array<std::array<std::uint64_t, kConvertibleKinds>, kConvertibleKinds> counts{};

  void add(GroupKind from, GroupKind to) {
    ++counts[static_cast<int>(from)][static_cast<int>(to)];
  }
  std::uint64_t total() const;
  GroupTransitions& operator+=(const GroupTransitions& other);
};

struct SampleTrace {
  std::uint64_t dense_selections = 0;
  std::uint64_t dense_rejections = 0;
  std::uint64_t decimal_selections = 0;
  std::uint64_t decimal_rejections = 0;
};

// Snapshot of one group for inspection and tests.
struct GroupInfo {
  int radix = 0;  // -1 for the decimal group
  GroupKind kind = GroupKind::kRegular;
  std::size_t size = 0;
  std::vector<std::uint32_t> members;  // empty for dense groups
  double sum = 0.0;
};

// Per-vertex radix-factorized sampling structure.
//
// Every neighbor's (lambda-scaled) integer bias is split into its set bits;
// group k holds the neighbors with bit k set, so each member carries exactly
// 2^k of mass and intra-group sampling is uniform. An alias table over the
// group sums picks the group. Float biases keep their fractional residuals in
// one extra decimal group sampled by rejection.
//
// Groups store neighbor indices, and regular/sparse groups keep an inverted
// index from neighbor index to slot, so an insert or delete touches at most
// K + 1 groups with O(1) work each.
//
// Reader/writer contract: any number of concurrent const calls, or one writer.
class VertexSampler {
 public:
  static constexpr std::uint32_t kNoSlot = std::numeric_limits<std::uint32_t>::max();

  explicit VertexSampler(SamplerOptions options = {}, BlockPool* pool = nullptr);

  // Builds from scratch in the given neighbor order. Float mode picks lambda
  // over the whole neighbor set.
  static VertexSampler build(std::span<const Neighbor> neighbors, SamplerOptions options = {},
                             BlockPool* pool = nullptr);

  // Appends a neighbor. An empty float-mode sampler picks lambda from this
  // first bias; afterwards lambda stays fixed.
  UpdateCost insert(VertexId id, double bias, std::uint64_t seq,
                    UpdateMode mode = UpdateMode::kStreaming);

  // Removes the neighbor at `index`; the tail neighbor takes its place.
  EraseResult erase(std::uint32_t index, UpdateMode mode = UpdateMode::kStreaming);

  // Removes several neighbors at once with two-phase delete-and-swap on every
  // affected group and on the neighbor list. Leaves the inter-group table
  // stale; call rebuild() before sampling. Returns the neighbor moves.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> erase_batch(
      std::span<const std::uint32_t> indices);

  // Re-classifies every group, converts representations where the kind
  // changed and rebuilds the inter-group table. Idempotent.
  void rebuild(GroupTransitions* transitions = nullptr);

  // Switches one radix group to the given representation. OneElement requires
  // exactly one member; Decimal is not a valid target.
  void convert_group(int radix, GroupKind kind);

  template <UniformSource Source>
  std::uint32_t sample(Source& source, SampleTrace* trace = nullptr) const;

  // P(neighbor i) computed from the structure: alias-induced group
  // probabilities times each group's conditional. Throws kEmptyVertex.
  std::vector<double> exact_distribution() const;

  // Stored index/residual slots in group structures (neighbor list excluded).
  std::size_t memory_slots() const;

  // Structural self-check; returns one message per violation.
  std::vector<std::string> check_invariants() const;

  std::uint32_t degree() const { return ids_.size(); }
  VertexId neighbor_id(std::uint32_t i) const { return ids_[i]; }
  double neighbor_bias(std::uint32_t i) const { return weights_[i]; }
  std::uint64_t neighbor_seq(std::uint32_t i) const { return seqs_[i]; }
  std::uint64_t integer_part(std::uint32_t i) const { return bits_[i]; }
  double residual(std::uint32_t i) const { return from_fixed(residuals_[i]); }
  // Scaled bias integer_part + residual, the mass actually sampled.
  double scaled_bias(std::uint32_t i) const {
    return static_cast<double>(bits_[i]) + residual(i);
  }

  // Residuals are held in 2^-53 fixed point so group sums are exact integers.
  static constexpr int kResidualBits = 53;
  static std::uint64_t to_fixed(double residual);
  static double from_fixed(unsigned __int128 fixed);

  const SamplerOptions& options() const { return options_; }
  double lambda() const { return lambda_; }
  // W_D * d < W_I + W_D for the current contents.
  bool lambda_constraint_met() const;
  double decimal_sum() const { return from_fixed(decimal_.sum); }
  // Integer mass per the group structures: sum of |G_k| * 2^k.
  unsigned __int128 integer_group_mass() const;
  double total_bias() const;
  bool alias_stale() const { return alias_stale_; }
  const AliasTable& inter_group_table() const { return inter_group_; }
  std::size_t group_count() const { return groups_.size(); }
  std::vector<GroupInfo> groups() const;
  std::optional<GroupKind> group_kind(int radix) const;
  std::size_t kind_count(GroupKind kind) const;

 private:
  friend struct SamplerTestAccess;

  struct Group {
    std::uint8_t radix = 0;
    GroupKind kind = GroupKind::kRegular;
    std::uint32_t size = 0;
    std::uint32_t solo = 0;               // one-element member
    std::vector<std::uint32_t> members;   // regular and sparse
    std::vector<std::uint32_t> inverted;  // regular: slot by neighbor index
    absl::flat_hash_map<std::uint32_t, std::uint32_t> sparse_index;  // sparse
  };

  struct DecimalGroup {
    std::vector<std::uint32_t> members;
    std::vector<std::uint64_t> residuals;  // fixed point
    unsigned __int128 sum = 0;
    // Maximum residual; batch deletions may leave it stale-high until rebuild().
    std::uint64_t bound = 0;
  };

  std::size_t slot_of(int radix) const {
    return static_cast<std::size_t>(std::popcount(mask_ & ((std::uint64_t{1} << radix) - 1)));
  }
  bool has_group(int radix) const { return (mask_ >> radix) & 1U; }
  Group& group_at(int radix) { return groups_[slot_of(radix)]; }
  const Group& group_at(int radix) const { return groups_[slot_of(radix)]; }

  GroupKind fresh_group_kind(std::size_t size) const;
  void add_group(int radix, std::uint32_t first_member);
  void remove_group(int radix);
  void add_member(Group& g, std::uint32_t index);
  void remove_member(Group& g, std::uint32_t index, UpdateCost& cost);
  void relink_member(Group& g, std::uint32_t from, std::uint32_t to);
  std::vector<std::uint32_t> collect_members(const Group& g) const;
  void set_representation(Group& g, GroupKind kind, std::vector<std::uint32_t> members);
  void append_decimal(std::uint32_t index, std::uint64_t residual);
  void remove_decimal(std::uint32_t index);
  void rebuild_alias();
  BiasValue scale(double bias) const;

  SamplerOptions options_;
  double lambda_ = 1.0;

  // Neighbor list, one column per field.
  PooledArray<VertexId> ids_;
  PooledArray<std::uint64_t> bits_;
  PooledArray<std::uint64_t> residuals_;
  PooledArray<double> weights_;
  PooledArray<std::uint64_t> seqs_;
  PooledArray<std::uint32_t> decimal_slots_;

  std::uint64_t mask_ = 0;      // radix positions with a materialized group
  std::vector<Group> groups_;   // ascending radix
  DecimalGroup decimal_;
  AliasTable inter_group_;      // buckets: groups_ in order, then decimal
  bool alias_stale_ = false;
};

template <UniformSource Source>
std::uint32_t VertexSampler::sample(Source& source, SampleTrace* trace) const {
  if (ids_.empty()) throw Error(ErrorCode::kEmptyVertex, "empty vertex");
  const std::size_t bucket = inter_group_.sample(source);
  if (bucket < groups_.size()) {
    const Group& g = groups_[bucket];
    switch (g.kind) {
      case GroupKind::kOneElement:
        return g.solo;
      case GroupKind::kRegular:
      case GroupKind::kSparse:
        return g.members[source.uniform_index(g.members.size())];
      case GroupKind::kDense: {
        // Rejection over the full neighbor list: accept when bit k is set.
        const std::uint64_t bit = std::uint64_t{1} << g.radix;
        const std::size_t d = ids_.size();
        if (trace) ++trace->dense_selections;
        for (;;) {
          const std::size_t i = source.uniform_index(d);
          if (bits_[i] & bit) return static_cast<std::uint32_t>(i);
          if (trace) ++trace->dense_rejections;
        }
      }
      case GroupKind::kDecimal:
        break;
    }
  }
  // Decimal group: uniform proposal, accept with probability residual / bound.
  if (trace) ++trace->decimal_selections;
  const std::size_t n = decimal_.members.size();
  for (;;) {
    const std::size_t j = source.uniform_index(n);
    if (source.uniform_real() * static_cast<double>(decimal_.bound) <
        static_cast<double>(decimal_.residuals[j])) {
      return decimal_.members[j];
    }
    if (trace) ++trace->decimal_rejections;
  }
}

}  // namespace bingo

#endif  // BINGO_CORE_RADIX_SAMPLER_H_
