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

#ifndef BINGO_CORE_DYN_GRAPH_H_
#define BINGO_CORE_DYN_GRAPH_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/inlined_vector.h"
#include "core/block_pool.h"
#include "core/radix_sampler.h"

namespace bingo {

struct GraphOptions {
  // Undirected graphs store both directions of every edge.
  bool directed = false;
  BiasMode mode = BiasMode::kInteger;
  bool adaptive = true;
  GroupThresholds thresholds;

  SamplerOptions sampler_options() const { return SamplerOptions{mode, adaptive, thresholds}; }
};

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  double bias = 1.0;
};

// Read-only view of one vertex's neighbor list. Valid until the next write.
class NeighborView {
 public:
  explicit NeighborView(const VertexSampler& sampler) : sampler_(&sampler) {}

  std::uint32_t degree() const { return sampler_->degree(); }
  VertexId id(std::uint32_t i) const { return sampler_->neighbor_id(i); }
  double bias(std::uint32_t i) const { return sampler_->neighbor_bias(i); }
  std::uint64_t seq(std::uint32_t i) const { return sampler_->neighbor_seq(i); }

 private:
  const VertexSampler* sampler_;
};

class DynGraph;
struct BatchStats;
struct EdgeUpdate;
BatchStats apply_batch(DynGraph& graph, std::span<const EdgeUpdate> batch);

// Dynamic adjacency store: one VertexSampler per vertex plus, per vertex, the
// live instances of each (src, dst) pair in sequence order. Vertex ids are
// dense; samplers are created lazily as ids appear.
//
// Same reader/writer contract as VertexSampler. The sequence counter is
// atomic so per-vertex work on distinct vertices can run in parallel.
class DynGraph {
 public:
  explicit DynGraph(GraphOptions options = {});
  DynGraph(DynGraph&& other) noexcept;
  DynGraph& operator=(DynGraph&& other) noexcept;

  // Builds every vertex from scratch; sequence numbers follow edge order.
  static DynGraph from_edges(std::span<const Edge> edges, GraphOptions options = {});

  // Returns the sequence number stamped on the new instance.
  std::uint64_t insert_edge(VertexId src, VertexId dst, double bias);
  // Removes the live (src, dst) instance with the smallest sequence number.
  void delete_edge(VertexId src, VertexId dst);
  void update_bias(VertexId src, VertexId dst, double new_bias);

  // Throws kUnknownVertex for ids past vertex_count().
  NeighborView neighbors(VertexId u) const;
  const VertexSampler& sampler(VertexId u) const;
  std::uint32_t degree(VertexId u) const { return u < vertices_.size() ? vertices_[u].sampler.degree() : 0; }

  // Membership in O(1) expected time.
  bool has_edge(VertexId u, VertexId v) const;
  std::size_t instance_count(VertexId u, VertexId v) const;

  template <UniformSource Source>
  VertexId sample_neighbor(VertexId u, Source& source) const {
    const VertexSampler& s = sampler(u);
    return s.neighbor_id(s.sample(source));
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  // Live directed neighbor entries summed over vertices.
  std::size_t entry_count() const;
  std::uint64_t next_sequence() const { return next_seq_.load(std::memory_order_relaxed); }
  const GraphOptions& options() const { return options_; }
  std::size_t memory_slots() const;
  // Number of materialized groups of each kind across all vertices.
  std::array<std::size_t, 5> group_kind_counts() const;

  void reserve_vertices(std::size_t n);

  // Live edges in sequence order; undirected edges appear once.
  std::vector<Edge> live_edges() const;

  // Instance-list hooks for structural checks.
  std::vector<std::uint32_t> instances(VertexId u, VertexId v) const;

 private:
  friend BatchStats apply_batch(DynGraph& graph, std::span<const EdgeUpdate> batch);
  friend struct GraphTestAccess;

  using InstanceList = absl::InlinedVector<std::uint32_t, 2>;

  struct Vertex {
    explicit Vertex(VertexSampler s) : sampler(std::move(s)) {}
    VertexSampler sampler;
    // Neighbor indices of live instances per destination, oldest first.
    absl::flat_hash_map<VertexId, InstanceList> instances;
  };

  void ensure_vertex(VertexId u);
  void insert_half(VertexId src, VertexId dst, double bias, std::uint64_t seq, UpdateMode mode);
  void delete_half(VertexId src, VertexId dst, UpdateMode mode);
  void repoint_instance(Vertex& v, std::uint32_t from, std::uint32_t to);

  GraphOptions options_;
  std::unique_ptr<BlockPool> pool_;
  std::vector<Vertex> vertices_;
  std::atomic<std::uint64_t> next_seq_{0};
};

// "src dst [bias]" per line, '#' starts a comment, bias defaults to 1.
// Throws kParse with the line number on malformed input.
std::vector<Edge> read_edge_list(std::istream& in);
std::vector<Edge> read_edge_list_file(const std::string& path);
DynGraph load_edge_list(std::istream& in, GraphOptions options = {});
void write_edge_list(std::ostream& out, std::span<const Edge> edges);

}  // namespace bingo

#endif  // BINGO_CORE_DYN_GRAPH_H_
