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

#ifndef BINGO_CORE_BATCH_UPDATE_H_
#define BINGO_CORE_BATCH_UPDATE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/delete_and_swap.h"
#include "core/dyn_graph.h"

namespace bingo {

enum class UpdateOp : std::uint8_t { kInsert, kDelete };

struct EdgeUpdate {
  UpdateOp op = UpdateOp::kInsert;
  VertexId src = 0;
  VertexId dst = 0;
  double bias = 1.0;  // inserts only
  std::uint64_t seq = 0;
};

// One endpoint's view of an update.
struct HalfUpdate {
  UpdateOp op;
  VertexId dst;
  double bias;
  std::uint64_t seq;
  std::uint32_t batch_index;
  // False for the mirrored half of an undirected update.
  bool primary;
};

struct VertexUpdates {
  VertexId vertex;
  std::vector<HalfUpdate> updates;  // timestamp order
};

// Stable partition by source vertex (and by destination too for undirected
// graphs), lists ordered by vertex id.
std::vector<VertexUpdates> partition_updates_by_vertex(std::span<const EdgeUpdate> batch,
                                                       bool directed);

struct BatchStats {
  std::uint64_t updates = 0;
  std::uint64_t inserts = 0;
  std::uint64_t deletes = 0;
  std::uint64_t errors = 0;
  std::uint64_t touched_vertices = 0;
  std::uint64_t rebuilds = 0;
  GroupTransitions transitions;
  double seconds = 0.0;
  // First few per-update failures, "update <i>: <reason>".
  std::vector<std::string> error_messages;

  BatchStats& operator+=(const BatchStats& other);
};

// Flat "key=value" record.
std::string format_stats(const BatchStats& stats);

// Applies updates one at a time in order; failures are counted, not thrown.
BatchStats apply_streaming(DynGraph& graph, std::span<const EdgeUpdate> batch);

// Per vertex: all inserts, then all deletes (earliest sequence first, two-phase
// delete-and-swap), then one rebuild. The result equals apply_streaming on the
// same batch. A delete that would fail under sequential replay is recorded as
// an error and skipped. Vertices are processed in parallel. Throws
// kInvalidArgument when timestamps are not strictly increasing.
BatchStats apply_batch(DynGraph& graph, std::span<const EdgeUpdate> batch);

}  // namespace bingo

#endif  // BINGO_CORE_BATCH_UPDATE_H_
