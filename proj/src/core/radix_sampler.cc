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

#include "core/radix_sampler.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "core/delete_and_swap.h"

namespace bingo {
namespace {

template <class T>
void release(std::vector<T>& v) {
  std::vector<T>().swap(v);
}

std::string u128_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

std::uint64_t GroupTransitions::total() const {
  std::uint64_t n = 0;
  for (const auto& row : counts) {
    for (std::uint64_t c : row) n += c;
  }
  return n;
}

GroupTransitions& GroupTransitions::operator+=(const GroupTransitions& other) {
  for (int i = 0; i < kConvertibleKinds; ++i) {
    for (int j = 0; j < kConvertibleKinds; ++j) counts[i][j] += other.counts[i][j];
  }
  return *this;
}

std::uint64_t VertexSampler::to_fixed(double residual) {
  return static_cast<std::uint64_t>(std::llround(std::ldexp(residual, kResidualBits)));
}

double VertexSampler::from_fixed(unsigned __int128 fixed) {
  return std::ldexp(static_cast<double>(fixed), -kResidualBits);
}

VertexSampler::VertexSampler(SamplerOptions options, BlockPool* pool)
    : options_(options),
      ids_(pool),
      bits_(pool),
      residuals_(pool),
      weights_(pool),
      seqs_(pool),
      decimal_slots_(pool) {
  const GroupThresholds& t = options_.thresholds;
  if (!(0 < t.beta && t.beta < t.alpha && t.alpha < 100)) {
    throw Error(ErrorCode::kInvalidArgument, "thresholds must satisfy 0 < beta < alpha < 100");
  }
}

VertexSampler VertexSampler::build(std::span<const Neighbor> neighbors, SamplerOptions options,
                                   BlockPool* pool) {
  VertexSampler s(options, pool);
  if (neighbors.empty()) return s;

  std::vector<BiasValue> values(neighbors.size());
  if (options.mode == BiasMode::kFloat) {
    std::vector<double> biases(neighbors.size());
    for (std::size_t i = 0; i < neighbors.size(); ++i) biases[i] = neighbors[i].bias;
    s.lambda_ = choose_lambda(biases).lambda;
    for (std::size_t i = 0; i < neighbors.size(); ++i) values[i] = s.scale(neighbors[i].bias);
  } else {
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      values[i] = BiasValue{integer_bias(neighbors[i].bias), 0.0};
    }
  }

  for (const BiasValue& v : values) {
    if (v.integer_part == 0 && to_fixed(v.residual) == 0) {
      throw Error(ErrorCode::kInvalidBias, "bias vanishes after scaling");
    }
  }

  const auto d = static_cast<std::uint32_t>(neighbors.size());
  s.ids_.reserve(d);
  s.bits_.reserve(d);
  s.residuals_.reserve(d);
  s.weights_.reserve(d);
  s.seqs_.reserve(d);
  s.decimal_slots_.reserve(d);

  std::array<std::uint32_t, kRadixBits> counts{};
  for (std::uint32_t i = 0; i < d; ++i) {
    s.ids_.push_back(neighbors[i].id);
    s.bits_.push_back(values[i].integer_part);
    s.residuals_.push_back(to_fixed(values[i].residual));
    s.weights_.push_back(neighbors[i].bias);
    s.seqs_.push_back(neighbors[i].seq);
    s.decimal_slots_.push_back(kNoSlot);
    for_each_radix(values[i].integer_part, [&](int k) { ++counts[k]; });
    s.mask_ |= values[i].integer_part;
  }

  // Member lists in ascending neighbor order, then each group's representation.
  std::array<std::vector<std::uint32_t>, kRadixBits> members;
  std::array<bool, kRadixBits> dense{};
  for (int k = 0; k < kRadixBits; ++k) {
    if (counts[k] == 0) continue;
    dense[k] = s.fresh_group_kind(counts[k]) == GroupKind::kDense;
    if (!dense[k]) members[k].reserve(counts[k]);
  }
  for (std::uint32_t i = 0; i < d; ++i) {
    for_each_radix(s.bits_[i], [&](int k) {
      if (!dense[k]) members[k].push_back(i);
    });
  }
  s.groups_.reserve(static_cast<std::size_t>(std::popcount(s.mask_)));
  for (int k = 0; k < kRadixBits; ++k) {
    if (counts[k] == 0) continue;
    Group& g = s.groups_.emplace_back();
    g.radix = static_cast<std::uint8_t>(k);
    if (dense[k]) {
      g.kind = GroupKind::kDense;
      g.size = counts[k];
    } else {
      s.set_representation(g, s.fresh_group_kind(counts[k]), std::move(members[k]));
    }
  }

  for (std::uint32_t i = 0; i < d; ++i) {
    if (s.residuals_[i] != 0) s.append_decimal(i, s.residuals_[i]);
  }
  s.rebuild_alias();
  return s;
}

BiasValue VertexSampler::scale(double bias) const {
  if (options_.mode == BiasMode::kInteger) return BiasValue{integer_bias(bias), 0.0};
  return scale_float_bias(bias, lambda_);
}

GroupKind VertexSampler::fresh_group_kind(std::size_t size) const {
  if (!options_.adaptive) return GroupKind::kRegular;
  return classify_group(size, ids_.size(), options_.thresholds);
}

void VertexSampler::set_representation(Group& g, GroupKind kind,
                                       std::vector<std::uint32_t> members) {
  g.kind = kind;
  g.size = static_cast<std::uint32_t>(members.size());
  g.sparse_index = {};
  switch (kind) {
    case GroupKind::kDense:
      release(g.members);
      release(g.inverted);
      break;
    case GroupKind::kOneElement:
      if (members.size() != 1) {
        throw Error(ErrorCode::kInvalidArgument, "one-element group needs exactly one member");
      }
      g.solo = members[0];
      release(g.members);
      release(g.inverted);
      break;
    case GroupKind::kRegular: {
      g.members = std::move(members);
      std::vector<std::uint32_t> inverted(ids_.size(), 0);
      for (std::uint32_t j = 0; j < g.members.size(); ++j) inverted[g.members[j]] = j;
      g.inverted = std::move(inverted);
      break;
    }
    case GroupKind::kSparse:
      g.members = std::move(members);
      release(g.inverted);
      g.sparse_index.reserve(g.members.size());
      for (std::uint32_t j = 0; j < g.members.size(); ++j) g.sparse_index[g.members[j]] = j;
      break;
    case GroupKind::kDecimal:
      throw Error(ErrorCode::kInvalidArgument, "radix groups cannot become decimal");
  }
}

std::vector<std::uint32_t> VertexSampler::collect_members(const Group& g) const {
  switch (g.kind) {
    case GroupKind::kOneElement:
      return {g.solo};
    case GroupKind::kRegular:
    case GroupKind::kSparse:
      return g.members;
    case GroupKind::kDense: {
      std::vector<std::uint32_t> out;
      out.reserve(g.size);
      const std::uint64_t bit = std::uint64_t{1} << g.radix;
      for (std::uint32_t i = 0; i < ids_.size(); ++i) {
        if (bits_[i] & bit) out.push_back(i);
      }
      return out;
    }
    case GroupKind::kDecimal:
      break;
  }
  return {};
}

void VertexSampler::convert_group(int radix, GroupKind kind) {
  if (radix < 0 || radix >= kRadixBits || !has_group(radix)) {
    throw Error(ErrorCode::kInvalidArgument, "no group at radix " + std::to_string(radix));
  }
  Group& g = group_at(radix);
  if (g.kind == kind) return;
  set_representation(g, kind, collect_members(g));
}

void VertexSampler::add_group(int radix, std::uint32_t first_member) {
  Group g;
  g.radix = static_cast<std::uint8_t>(radix);
  set_representation(g, fresh_group_kind(1), {first_member});
  groups_.insert(groups_.begin() + static_cast<std::ptrdiff_t>(slot_of(radix)), std::move(g));
  mask_ |= std::uint64_t{1} << radix;
}

void VertexSampler::remove_group(int radix) {
  groups_.erase(groups_.begin() + static_cast<std::ptrdiff_t>(slot_of(radix)));
  mask_ &= ~(std::uint64_t{1} << radix);
}

void VertexSampler::add_member(Group& g, std::uint32_t index) {
  switch (g.kind) {
    case GroupKind::kDense:
      ++g.size;
      break;
    case GroupKind::kOneElement:
      set_representation(g, fresh_group_kind(2), {g.solo, index});
      break;
    case GroupKind::kRegular: {
      const auto slot = static_cast<std::uint32_t>(g.members.size());
      g.members.push_back(index);
      if (g.inverted.size() <= index) g.inverted.resize(index + 1, 0);
      g.inverted[index] = slot;
      ++g.size;
      break;
    }
    case GroupKind::kSparse: {
      const auto slot = static_cast<std::uint32_t>(g.members.size());
      g.members.push_back(index);
      g.sparse_index[index] = slot;
      ++g.size;
      break;
    }
    case GroupKind::kDecimal:
      break;
  }
}

void VertexSampler::remove_member(Group& g, std::uint32_t index, UpdateCost& cost) {
  switch (g.kind) {
    case GroupKind::kDense:
      --g.size;
      if (g.size == 1 && options_.adaptive) {
        // Find the survivor; `index` is still in the list with its bit set.
        const std::uint64_t bit = std::uint64_t{1} << g.radix;
        std::uint32_t survivor = kNoSlot;
        for (std::uint32_t i = 0; i < ids_.size(); ++i) {
          ++cost.neighbor_scans;
          if (i != index && (bits_[i] & bit)) {
            survivor = i;
            break;
          }
        }
        set_representation(g, GroupKind::kOneElement, {survivor});
      }
      return;
    case GroupKind::kOneElement:
      g.size = 0;
      return;
    case GroupKind::kRegular: {
      const std::uint32_t slot = g.inverted[index];
      const std::uint32_t last = g.members.back();
      g.members[slot] = last;
      g.inverted[last] = slot;
      g.members.pop_back();
      break;
    }
    case GroupKind::kSparse: {
      auto it = g.sparse_index.find(index);
      const std::uint32_t slot = it->second;
      g.sparse_index.erase(it);
      const std::uint32_t last = g.members.back();
      if (last != index) {
        g.members[slot] = last;
        g.sparse_index[last] = slot;
      }
      g.members.pop_back();
      break;
    }
    case GroupKind::kDecimal:
      return;
  }
  --g.size;
  if (g.size == 1 && options_.adaptive) {
    set_representation(g, GroupKind::kOneElement, {g.members[0]});
  }
}

void VertexSampler::relink_member(Group& g, std::uint32_t from, std::uint32_t to) {
  switch (g.kind) {
    case GroupKind::kOneElement:
      g.solo = to;
      break;
    case GroupKind::kRegular: {
      const std::uint32_t slot = g.inverted[from];
      g.members[slot] = to;
      g.inverted[to] = slot;
      break;
    }
    case GroupKind::kSparse: {
      auto it = g.sparse_index.find(from);
      const std::uint32_t slot = it->second;
      g.sparse_index.erase(it);
      g.sparse_index[to] = slot;
      g.members[slot] = to;
      break;
    }
    case GroupKind::kDense:
    case GroupKind::kDecimal:
      break;
  }
}

void VertexSampler::append_decimal(std::uint32_t index, std::uint64_t residual) {
  decimal_slots_[index] = static_cast<std::uint32_t>(decimal_.members.size());
  decimal_.members.push_back(index);
  decimal_.residuals.push_back(residual);
  decimal_.sum += residual;
  decimal_.bound = std::max(decimal_.bound, residual);
}

void VertexSampler::remove_decimal(std::uint32_t index) {
  const std::uint32_t slot = decimal_slots_[index];
  const std::uint64_t residual = decimal_.residuals[slot];
  const std::size_t last = decimal_.members.size() - 1;
  if (slot != last) {
    decimal_.members[slot] = decimal_.members[last];
    decimal_.residuals[slot] = decimal_.residuals[last];
    decimal_slots_[decimal_.members[slot]] = slot;
  }
  decimal_.members.pop_back();
  decimal_.residuals.pop_back();
  decimal_slots_[index] = kNoSlot;
  decimal_.sum -= residual;
  if (residual == decimal_.bound) {
    // The maximum left; rescan so the rejection bound stays tight.
    decimal_.bound = 0;
    for (std::uint64_t r : decimal_.residuals) decimal_.bound = std::max(decimal_.bound, r);
  }
}

void VertexSampler::rebuild_alias() {
  alias_stale_ = false;
  if (ids_.empty()) {
    inter_group_.clear();
    return;
  }
  thread_local std::vector<double> weights;
  weights.clear();
  for (const Group& g : groups_) {
    weights.push_back(static_cast<double>(g.size) * static_cast<double>(std::uint64_t{1} << g.radix));
  }
  if (!decimal_.members.empty()) weights.push_back(from_fixed(decimal_.sum));
  inter_group_.assign(weights);
}

UpdateCost VertexSampler::insert(VertexId id, double bias, std::uint64_t seq, UpdateMode mode) {
  if (options_.mode == BiasMode::kFloat && ids_.empty()) {
    const double single[] = {bias};
    lambda_ = choose_lambda(single).lambda;
  }
  const BiasValue value = scale(bias);
  const std::uint64_t residual = to_fixed(value.residual);
  if (value.integer_part == 0 && residual == 0) {
    throw Error(ErrorCode::kInvalidBias, "bias vanishes after scaling");
  }

  const std::uint32_t index = ids_.size();
  ids_.push_back(id);
  bits_.push_back(value.integer_part);
  residuals_.push_back(residual);
  weights_.push_back(bias);
  seqs_.push_back(seq);
  decimal_slots_.push_back(kNoSlot);

  UpdateCost cost;
  for_each_radix(value.integer_part, [&](int k) {
    if (has_group(k)) {
      add_member(group_at(k), index);
    } else {
      add_group(k, index);
    }
    ++cost.group_mutations;
  });
  if (residual != 0) {
    append_decimal(index, residual);
    ++cost.group_mutations;
  }

  if (mode == UpdateMode::kStreaming) {
    rebuild_alias();
    cost.alias_buckets = static_cast<std::uint32_t>(inter_group_.size());
  } else {
    alias_stale_ = true;
  }
  return cost;
}

EraseResult VertexSampler::erase(std::uint32_t index, UpdateMode mode) {
  if (index >= ids_.size()) throw Error(ErrorCode::kNoSuchEdge, "no such edge");

  EraseResult result;
  UpdateCost& cost = result.cost;
  std::uint64_t touched = 0;
  bool decimal_touched = false;

  for_each_radix(bits_[index], [&](int k) {
    Group& g = group_at(k);
    remove_member(g, index, cost);
    if (g.size == 0) remove_group(k);
    touched |= std::uint64_t{1} << k;
  });
  if (decimal_slots_[index] != kNoSlot) {
    remove_decimal(index);
    decimal_touched = true;
  }

  // Swap the tail neighbor into the hole and repoint its group entries.
  const std::uint32_t last = ids_.size() - 1;
  if (index != last) {
    ids_[index] = ids_[last];
    bits_[index] = bits_[last];
    residuals_[index] = residuals_[last];
    weights_[index] = weights_[last];
    seqs_[index] = seqs_[last];
    decimal_slots_[index] = decimal_slots_[last];
    for_each_radix(bits_[index], [&](int k) {
      Group& g = group_at(k);
      if (g.kind != GroupKind::kDense) {
        relink_member(g, last, index);
        touched |= std::uint64_t{1} << k;
      }
    });
    if (decimal_slots_[index] != kNoSlot) {
      decimal_.members[decimal_slots_[index]] = index;
      decimal_touched = true;
    }
    result.moved_from = last;
  }
  ids_.pop_back();
  bits_.pop_back();
  residuals_.pop_back();
  weights_.pop_back();
  seqs_.pop_back();
  decimal_slots_.pop_back();

  cost.group_mutations = static_cast<std::uint32_t>(std::popcount(touched)) + (decimal_touched ? 1 : 0);
  if (mode == UpdateMode::kStreaming) {
    rebuild_alias();
    cost.alias_buckets = static_cast<std::uint32_t>(inter_group_.size());
  } else {
    alias_stale_ = true;
  }
  return result;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> VertexSampler::erase_batch(
    std::span<const std::uint32_t> indices) {
  const DeletePlan list_plan = plan_delete_and_swap(ids_.size(), indices);
  if (indices.empty()) return {};

  // Group phase: slots to drop per radix group.
  std::array<std::vector<std::uint32_t>, kRadixBits> per_group;
  std::vector<std::uint32_t> decimal_slots;
  for (std::uint32_t i : indices) {
    for_each_radix(bits_[i], [&](int k) { per_group[k].push_back(i); });
    if (decimal_slots_[i] != kNoSlot) decimal_slots.push_back(decimal_slots_[i]);
  }

  std::uint64_t emptied = 0;
  std::vector<std::uint32_t> slots;
  for (int k = 0; k < kRadixBits; ++k) {
    const std::vector<std::uint32_t>& gone = per_group[k];
    if (gone.empty()) continue;
    Group& g = group_at(k);
    switch (g.kind) {
      case GroupKind::kDense:
      case GroupKind::kOneElement:
        break;
      case GroupKind::kRegular: {
        slots.clear();
        for (std::uint32_t i : gone) slots.push_back(g.inverted[i]);
        const DeletePlan plan = plan_delete_and_swap(g.members.size(), slots);
        apply_moves(g.members, plan);
        g.members.resize(plan.new_size);
        for (const SlotMove& m : plan.moves) g.inverted[g.members[m.to]] = m.to;
        break;
      }
      case GroupKind::kSparse: {
        slots.clear();
        for (std::uint32_t i : gone) {
          auto it = g.sparse_index.find(i);
          slots.push_back(it->second);
          g.sparse_index.erase(it);
        }
        const DeletePlan plan = plan_delete_and_swap(g.members.size(), slots);
        apply_moves(g.members, plan);
        g.members.resize(plan.new_size);
        for (const SlotMove& m : plan.moves) g.sparse_index[g.members[m.to]] = m.to;
        break;
      }
      case GroupKind::kDecimal:
        break;
    }
    g.size -= static_cast<std::uint32_t>(gone.size());
    if (g.size == 0) emptied |= std::uint64_t{1} << k;
  }
  for_each_radix(emptied, [&](int k) { remove_group(k); });

  if (!decimal_slots.empty()) {
    for (std::uint32_t slot : decimal_slots) {
      decimal_.sum -= decimal_.residuals[slot];
      decimal_slots_[decimal_.members[slot]] = kNoSlot;
    }
    const DeletePlan plan = plan_delete_and_swap(decimal_.members.size(), decimal_slots);
    apply_moves(decimal_.members, plan);
    apply_moves(decimal_.residuals, plan);
    decimal_.members.resize(plan.new_size);
    decimal_.residuals.resize(plan.new_size);
    for (const SlotMove& m : plan.moves) decimal_slots_[decimal_.members[m.to]] = m.to;
    if (decimal_.members.empty()) decimal_.bound = 0;
  }

  // Neighbor list phase, then repoint group entries of every moved neighbor.
  apply_moves(ids_, list_plan);
  apply_moves(bits_, list_plan);
  apply_moves(residuals_, list_plan);
  apply_moves(weights_, list_plan);
  apply_moves(seqs_, list_plan);
  apply_moves(decimal_slots_, list_plan);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> moves;
  moves.reserve(list_plan.moves.size());
  for (const SlotMove& m : list_plan.moves) {
    for_each_radix(bits_[m.to], [&](int k) { relink_member(group_at(k), m.from, m.to); });
    if (decimal_slots_[m.to] != kNoSlot) decimal_.members[decimal_slots_[m.to]] = m.to;
    moves.emplace_back(m.from, m.to);
  }
  ids_.resize(list_plan.new_size);
  bits_.resize(list_plan.new_size);
  residuals_.resize(list_plan.new_size);
  weights_.resize(list_plan.new_size);
  seqs_.resize(list_plan.new_size);
  decimal_slots_.resize(list_plan.new_size);

  alias_stale_ = true;
  return moves;
}

void VertexSampler::rebuild(GroupTransitions* transitions) {
  const std::size_t d = ids_.size();
  for (Group& g : groups_) {
    const GroupKind target = fresh_group_kind(g.size);
    if (target != g.kind) {
      const GroupKind from = g.kind;
      set_representation(g, target, collect_members(g));
      if (transitions) transitions->add(from, target);
    } else if (g.kind == GroupKind::kRegular && g.inverted.size() != d) {
      g.inverted.resize(d);
    }
  }
  decimal_.sum = 0;
  decimal_.bound = 0;
  for (std::uint64_t r : decimal_.residuals) {
    decimal_.sum += r;
    decimal_.bound = std::max(decimal_.bound, r);
  }
  rebuild_alias();
}

std::vector<double> VertexSampler::exact_distribution() const {
  if (ids_.empty()) throw Error(ErrorCode::kEmptyVertex, "empty vertex");
  if (alias_stale_) {
    throw Error(ErrorCode::kInvalidArgument, "inter-group table is stale; rebuild first");
  }
  const std::vector<double> group_prob = inter_group_.induced_distribution();
  std::vector<double> p(ids_.size(), 0.0);
  for (std::size_t b = 0; b < groups_.size(); ++b) {
    const Group& g = groups_[b];
    switch (g.kind) {
      case GroupKind::kOneElement:
        p[g.solo] += group_prob[b];
        break;
      case GroupKind::kRegular:
      case GroupKind::kSparse: {
        const double share = group_prob[b] / static_cast<double>(g.members.size());
        for (std::uint32_t m : g.members) p[m] += share;
        break;
      }
      case GroupKind::kDense: {
        // What the rejection loop converges to: uniform over the actual members.
        const std::vector<std::uint32_t> members = collect_members(g);
        const double share = group_prob[b] / static_cast<double>(members.size());
        for (std::uint32_t m : members) p[m] += share;
        break;
      }
      case GroupKind::kDecimal:
        break;
    }
  }
  if (!decimal_.members.empty()) {
    unsigned __int128 actual = 0;
    for (std::uint64_t r : decimal_.residuals) actual += r;
    const double total = from_fixed(actual);
    const double group = group_prob[groups_.size()];
    for (std::size_t j = 0; j < decimal_.members.size(); ++j) {
      p[decimal_.members[j]] += group * from_fixed(decimal_.residuals[j]) / total;
    }
  }
  return p;
}

std::size_t VertexSampler::memory_slots() const {
  const std::size_t d = ids_.size();
  std::size_t slots = 0;
  for (const Group& g : groups_) {
    switch (g.kind) {
      case GroupKind::kRegular: slots += g.size + d; break;
      case GroupKind::kSparse: slots += 2 * static_cast<std::size_t>(g.size); break;
      case GroupKind::kOneElement: slots += 1; break;
      case GroupKind::kDense:
      case GroupKind::kDecimal: break;
    }
  }
  return slots + 2 * decimal_.members.size();
}

unsigned __int128 VertexSampler::integer_group_mass() const {
  unsigned __int128 mass = 0;
  for (const Group& g : groups_) mass += static_cast<unsigned __int128>(g.size) << g.radix;
  return mass;
}

double VertexSampler::total_bias() const {
  return static_cast<double>(integer_group_mass()) + from_fixed(decimal_.sum);
}

bool VertexSampler::lambda_constraint_met() const {
  const double wd = from_fixed(decimal_.sum);
  const double wi = static_cast<double>(integer_group_mass());
  return wd * static_cast<double>(ids_.size()) < wi + wd;
}

std::vector<GroupInfo> VertexSampler::groups() const {
  std::vector<GroupInfo> out;
  out.reserve(groups_.size() + 1);
  for (const Group& g : groups_) {
    GroupInfo info;
    info.radix = g.radix;
    info.kind = g.kind;
    info.size = g.size;
    if (g.kind != GroupKind::kDense) info.members = collect_members(g);
    info.sum = std::ldexp(static_cast<double>(g.size), g.radix);
    out.push_back(std::move(info));
  }
  if (!decimal_.members.empty()) {
    GroupInfo info;
    info.radix = -1;
    info.kind = GroupKind::kDecimal;
    info.size = decimal_.members.size();
    info.members = decimal_.members;
    info.sum = from_fixed(decimal_.sum);
    out.push_back(std::move(info));
  }
  return out;
}

std::optional<GroupKind> VertexSampler::group_kind(int radix) const {
  if (radix < 0 || radix >= kRadixBits || !has_group(radix)) return std::nullopt;
  return group_at(radix).kind;
}

std::size_t VertexSampler::kind_count(GroupKind kind) const {
  if (kind == GroupKind::kDecimal) return decimal_.members.empty() ? 0 : 1;
  return static_cast<std::size_t>(
      std::count_if(groups_.begin(), groups_.end(), [&](const Group& g) { return g.kind == kind; }));
}

std::vector<std::string> VertexSampler::check_invariants() const {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& msg) { bad.push_back(msg); };
  const std::uint32_t d = ids_.size();

  std::uint64_t mask = 0;
  int previous = -1;
  for (const Group& g : groups_) {
    if (g.radix <= previous) fail("groups out of radix order");
    previous = g.radix;
    mask |= std::uint64_t{1} << g.radix;
  }
  if (mask != mask_) fail("group mask disagrees with materialized groups");

  std::uint64_t union_bits = 0;
  for (std::uint32_t i = 0; i < d; ++i) union_bits |= bits_[i];
  if (union_bits != mask_) fail("materialized groups disagree with neighbor bits");

  for (const Group& g : groups_) {
    const std::string where = "group 2^" + std::to_string(g.radix) + " (" + group_kind_name(g.kind) + ")";
    const std::uint64_t bit = std::uint64_t{1} << g.radix;
    std::uint32_t actual = 0;
    for (std::uint32_t i = 0; i < d; ++i) actual += (bits_[i] & bit) ? 1 : 0;
    if (actual != g.size) {
      fail("conservation: " + where + " records " + std::to_string(g.size) + " members, bits say " +
           std::to_string(actual));
    }
    switch (g.kind) {
      case GroupKind::kOneElement:
        if (g.solo >= d || !(bits_[g.solo] & bit)) fail(where + ": member lacks the radix bit");
        break;
      case GroupKind::kRegular:
      case GroupKind::kSparse:
        if (g.members.size() != g.size) fail(where + ": member array not compact");
        for (std::uint32_t j = 0; j < g.members.size(); ++j) {
          const std::uint32_t m = g.members[j];
          if (m >= d || !(bits_[m] & bit)) {
            fail(where + ": slot " + std::to_string(j) + " holds a non-member");
            continue;
          }
          std::uint32_t back = kNoSlot;
          if (g.kind == GroupKind::kRegular) {
            if (m < g.inverted.size()) back = g.inverted[m];
          } else {
            auto it = g.sparse_index.find(m);
            if (it != g.sparse_index.end()) back = it->second;
          }
          if (back != j) fail(where + ": inverted index broken at slot " + std::to_string(j));
        }
        if (g.kind == GroupKind::kSparse && g.sparse_index.size() != g.members.size()) {
          fail(where + ": sparse index size mismatch");
        }
        break;
      case GroupKind::kDense:
      case GroupKind::kDecimal:
        break;
    }
  }

  // Integer conservation against the neighbor list, exact in 128 bits.
  unsigned __int128 neighbor_mass = 0;
  unsigned __int128 neighbor_residual = 0;
  std::size_t with_residual = 0;
  for (std::uint32_t i = 0; i < d; ++i) {
    neighbor_mass += bits_[i];
    neighbor_residual += residuals_[i];
    if (residuals_[i] != 0) ++with_residual;
  }
  if (neighbor_mass != integer_group_mass()) {
    fail("conservation: group sums " + u128_string(integer_group_mass()) + " != bias sum " +
         u128_string(neighbor_mass));
  }
  if (neighbor_residual != decimal_.sum) fail("conservation: decimal sum mismatch");
  if (with_residual != decimal_.members.size()) fail("decimal group membership mismatch");
  for (std::size_t j = 0; j < decimal_.members.size(); ++j) {
    const std::uint32_t m = decimal_.members[j];
    if (m >= d || decimal_slots_[m] != j || residuals_[m] != decimal_.residuals[j]) {
      fail("decimal group inverted index broken at slot " + std::to_string(j));
    }
    if (decimal_.residuals[j] > decimal_.bound) fail("decimal rejection bound below a residual");
  }

  if (!alias_stale_ && d > 0) {
    const std::size_t buckets = groups_.size() + (decimal_.members.empty() ? 0 : 1);
    if (inter_group_.size() != buckets) {
      fail("inter-group table has " + std::to_string(inter_group_.size()) + " buckets, expected " +
           std::to_string(buckets));
    } else {
      const std::vector<double> induced = inter_group_.induced_distribution();
      const double total = total_bias();
      for (std::size_t b = 0; b < groups_.size(); ++b) {
        const double expect = std::ldexp(static_cast<double>(groups_[b].size), groups_[b].radix) / total;
        if (std::abs(induced[b] - expect) > 1e-9) fail("inter-group probability mismatch");
      }
    }
  }
  return bad;
}

}  // namespace bingo
