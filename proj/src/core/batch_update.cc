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

#include "core/batch_update.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "absl/container/flat_hash_map.h"
#include "core/error.h"

namespace bingo {

DeletePlan plan_delete_and_swap(std::size_t size, std::span<const std::uint32_t> positions) {
  std::vector<std::uint32_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= size) {
      throw Error(ErrorCode::kInvalidArgument, "delete position out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate delete position");
    }
  }

  DeletePlan plan;
  const std::uint32_t window = static_cast<std::uint32_t>(size - sorted.size());
  plan.new_size = window;
  // Marked positions inside the window are a suffix of `sorted`.
  const auto first_in_window = std::lower_bound(sorted.begin(), sorted.end(), window);
  const std::size_t holes = static_cast<std::size_t>(first_in_window - sorted.begin());
  plan.moves.reserve(holes);
  auto marked = first_in_window;
  std::size_t next_hole = 0;
  for (std::uint32_t i = window; i < size && next_hole < holes; ++i) {
    if (marked != sorted.end() && *marked == i) {
      ++marked;
      continue;
    }
    plan.moves.push_back(SlotMove{i, sorted[next_hole++]});
  }
  std::sort(plan.moves.begin(), plan.moves.end(),
            [](const SlotMove& a, const SlotMove& b) { return a.to < b.to; });
  return plan;
}

namespace {

constexpr std::size_t kMaxErrorMessages = 16;

void record_error(BatchStats& stats, std::size_t index, const std::string& why) {
  ++stats.errors;
  if (stats.error_messages.size() < kMaxErrorMessages) {
    stats.error_messages.push_back("update " + std::to_string(index) + ": " + why);
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<VertexUpdates> partition_updates_by_vertex(std::span<const EdgeUpdate> batch,
                                                       bool directed) {
  std::vector<VertexUpdates> out;
  absl::flat_hash_map<VertexId, std::size_t> slot;
  auto push = [&](VertexId vertex, const HalfUpdate& half) {
    auto [it, fresh] = slot.try_emplace(vertex, out.size());
    if (fresh) out.push_back(VertexUpdates{vertex, {}});
    out[it->second].updates.push_back(half);
  };
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const EdgeUpdate& u = batch[i];
    const auto index = static_cast<std::uint32_t>(i);
    push(u.src, HalfUpdate{u.op, u.dst, u.bias, u.seq, index, true});
    if (!directed && u.src != u.dst) {
      push(u.dst, HalfUpdate{u.op, u.src, u.bias, u.seq, index, false});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const VertexUpdates& a, const VertexUpdates& b) { return a.vertex < b.vertex; });
  return out;
}

BatchStats& BatchStats::operator+=(const BatchStats& other) {
  updates += other.updates;
  inserts += other.inserts;
  deletes += other.deletes;
  errors += other.errors;
  touched_vertices += other.touched_vertices;
  rebuilds += other.rebuilds;
  transitions += other.transitions;
  seconds += other.seconds;
  for (const std::string& m : other.error_messages) {
    if (error_messages.size() >= kMaxErrorMessages) break;
    error_messages.push_back(m);
  }
  return *this;
}

std::string format_stats(const BatchStats& stats) {
  std::ostringstream out;
  out << "updates=" << stats.updates << " inserts=" << stats.inserts
      << " deletes=" << stats.deletes << " errors=" << stats.errors
      << " touched_vertices=" << stats.touched_vertices << " rebuilds=" << stats.rebuilds
      << " transitions=" << stats.transitions.total() << " seconds=" << stats.seconds;
  return out.str();
}

BatchStats apply_streaming(DynGraph& graph, std::span<const EdgeUpdate> batch) {
  const auto start = std::chrono::steady_clock::now();
  BatchStats stats;
  stats.updates = batch.size();
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const EdgeUpdate& u = batch[i];
    try {
      if (u.op == UpdateOp::kInsert) {
        graph.insert_edge(u.src, u.dst, u.bias);
        ++stats.inserts;
      } else {
        graph.delete_edge(u.src, u.dst);
        ++stats.deletes;
      }
    } catch (const Error& e) {
      record_error(stats, i, e.what());
    }
  }
  stats.seconds = seconds_since(start);
  return stats;
}

BatchStats apply_batch(DynGraph& graph, std::span<const EdgeUpdate> batch) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 1; i < batch.size(); ++i) {
    if (batch[i].seq <= batch[i - 1].seq) {
      throw Error(ErrorCode::kInvalidArgument,
                  "update timestamps must be strictly increasing (update " + std::to_string(i) +
                      ")");
    }
  }

  BatchStats stats;
  stats.updates = batch.size();
  if (batch.empty()) return stats;

  // Inserts with an invalid bias fail before touching any vertex. Valid
  // inserts take graph sequence numbers in batch order, exactly as streaming.
  std::vector<std::uint64_t> graph_seq(batch.size(), 0);
  std::vector<char> rejected(batch.size(), 0);
  std::uint64_t next = graph.next_sequence();
  VertexId max_id = 0;
  bool any_insert = false;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const EdgeUpdate& u = batch[i];
    if (u.op != UpdateOp::kInsert) continue;
    try {
      if (graph.options().mode == BiasMode::kInteger) {
        integer_bias(u.bias);
      } else if (!(u.bias > 0.0) || !std::isfinite(u.bias)) {
        throw Error(ErrorCode::kInvalidBias, "invalid bias: must be positive and finite");
      }
      graph_seq[i] = next++;
      max_id = std::max({max_id, u.src, u.dst});
      any_insert = true;
    } catch (const Error& e) {
      rejected[i] = 1;
      record_error(stats, i, e.what());
    }
  }
  if (any_insert) graph.ensure_vertex(max_id);
  graph.next_seq_.store(next, std::memory_order_relaxed);

  const std::vector<VertexUpdates> parts =
      partition_updates_by_vertex(batch, graph.options().directed);

  std::vector<BatchStats> local(parts.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(parts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    const VertexUpdates& part = parts[p];
    BatchStats& s = local[p];
    if (part.vertex >= graph.vertices_.size()) {
      // Only deletes reach a vertex that was never created.
      for (const HalfUpdate& h : part.updates) {
        if (h.primary) record_error(s, h.batch_index, "no such edge");
      }
      continue;
    }
    DynGraph::Vertex& v = graph.vertices_[part.vertex];

    // Replays the per-destination instance counts in batch order so a delete
    // that sequential semantics would reject is skipped here too.
    absl::flat_hash_map<VertexId, std::size_t> live;
    auto live_count = [&](VertexId dst) -> std::size_t& {
      auto [it, fresh] = live.try_emplace(dst, 0);
      if (fresh) {
        auto inst = v.instances.find(dst);
        it->second = inst == v.instances.end() ? 0 : inst->second.size();
      }
      return it->second;
    };
    std::vector<char> skip(part.updates.size(), 0);
    for (std::size_t j = 0; j < part.updates.size(); ++j) {
      const HalfUpdate& h = part.updates[j];
      if (h.op == UpdateOp::kInsert) {
        if (rejected[h.batch_index]) {
          skip[j] = 1;
        } else {
          ++live_count(h.dst);
        }
      } else if (std::size_t& c = live_count(h.dst); c == 0) {
        skip[j] = 1;
        if (h.primary) record_error(s, h.batch_index, "no such edge");
      } else {
        --c;
      }
    }

    for (std::size_t j = 0; j < part.updates.size(); ++j) {
      const HalfUpdate& h = part.updates[j];
      if (skip[j] || h.op != UpdateOp::kInsert) continue;
      try {
        v.sampler.insert(h.dst, h.bias, graph_seq[h.batch_index], UpdateMode::kBatch);
      } catch (const Error& e) {
        if (h.primary) record_error(s, h.batch_index, e.what());
        continue;
      }
      v.instances[h.dst].push_back(v.sampler.degree() - 1);
      if (h.primary) ++s.inserts;
    }

    // Earliest instances go first, so per destination the doomed entries
    // form a prefix of the instance list.
    absl::flat_hash_map<VertexId, std::size_t> taken;
    std::vector<std::uint32_t> positions;
    for (std::size_t j = 0; j < part.updates.size(); ++j) {
      const HalfUpdate& h = part.updates[j];
      if (skip[j] || h.op != UpdateOp::kDelete) continue;
      std::size_t& k = taken[h.dst];
      positions.push_back(v.instances[h.dst][k++]);
      if (h.primary) ++s.deletes;
    }
    if (!positions.empty()) {
      for (const auto& [dst, k] : taken) {
        auto it = v.instances.find(dst);
        it->second.erase(it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(k));
        if (it->second.empty()) v.instances.erase(it);
      }
      for (const auto& [from, to] : v.sampler.erase_batch(positions)) {
        graph.repoint_instance(v, from, to);
      }
    }

    v.sampler.rebuild(&s.transitions);
    ++s.rebuilds;
    ++s.touched_vertices;
  }

  for (const BatchStats& s : local) {
    stats.inserts += s.inserts;
    stats.deletes += s.deletes;
    stats.errors += s.errors;
    stats.rebuilds += s.rebuilds;
    stats.touched_vertices += s.touched_vertices;
    stats.transitions += s.transitions;
    for (const std::string& m : s.error_messages) {
      if (stats.error_messages.size() < kMaxErrorMessages) stats.error_messages.push_back(m);
    }
  }
  stats.seconds = seconds_since(start);
  return stats;
}

}  // namespace bingo
