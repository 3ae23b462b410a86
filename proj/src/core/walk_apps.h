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

#ifndef BINGO_CORE_WALK_APPS_H_
#define BINGO_CORE_WALK_APPS_H_

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "core/dyn_graph.h"
#include "core/rng.h"

namespace bingo {

struct WalkConfig {
  std::uint32_t walk_length = 80;
  double p = 0.5;
  double q = 2.0;
  double termination_prob = 1.0 / 80.0;
  std::uint32_t walkers_per_vertex = 1;
  std::uint64_t seed = 0;
};

struct Walk {
  std::vector<VertexId> vertices;  // vertices[0] is the start
  // Stopped early at a vertex with no out-neighbors.
  bool truncated = false;

  std::size_t steps() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// walkers_per_vertex copies of every vertex with at least one neighbor.
std::vector<VertexId> default_starts(const DynGraph& g, std::uint32_t walkers_per_vertex = 1);

// Walker i draws from Rng::for_stream(seed, i), so output does not depend on
// the thread count. Every start must be a known vertex (kUnknownVertex).
std::vector<Walk> deepwalk_walks(const DynGraph& g, std::span<const VertexId> starts,
                                 std::uint32_t walk_length, std::uint64_t seed);

// 1/p when candidate == prev, 1 when prev -> candidate is an edge, 1/q otherwise.
double node2vec_factor(const DynGraph& g, VertexId prev, VertexId candidate, double p, double q);

// One second-order step from `cur` having arrived from `prev`: propose by
// first-order bias, accept with node2vec_factor / max(1/p, 1, 1/q).
template <UniformSource Source>
VertexId node2vec_step(const DynGraph& g, VertexId prev, VertexId cur, double p, double q,
                       Source& source, std::uint64_t* rejections = nullptr) {
  const double f_max = std::max({1.0 / p, 1.0, 1.0 / q});
  // Constant factor: every proposal is accepted, so skip the coin and stay
  // draw-for-draw identical to a first-order walk.
  if (f_max == std::min({1.0 / p, 1.0, 1.0 / q})) return g.sample_neighbor(cur, source);
  for (;;) {
    const VertexId v = g.sample_neighbor(cur, source);
    if (source.uniform_real() * f_max < node2vec_factor(g, prev, v, p, q)) return v;
    if (rejections) ++*rejections;
  }
}

// Throws kInvalidArgument unless p, q > 0.
std::vector<Walk> node2vec_walks(const DynGraph& g, std::span<const VertexId> starts,
                                 std::uint32_t walk_length, double p, double q,
                                 std::uint64_t seed);

struct PprResult {
  std::vector<Walk> walks;           // empty unless requested
  std::vector<std::uint32_t> steps;  // per walk
  std::vector<std::uint64_t> visits;  // per vertex, start included
};

// Each walk repeats: one biased step, then stop with probability
// termination_prob. Throws kInvalidArgument unless termination_prob is in (0, 1].
PprResult ppr_walks(const DynGraph& g, std::span<const VertexId> sources,
                    double termination_prob, std::uint64_t seed, bool keep_walks = true);

// One line per walk, space-separated ids.
void write_walks(std::ostream& out, std::span<const Walk> walks);
// "vertex count" per visited vertex.
void write_visits(std::ostream& out, std::span<const std::uint64_t> visits);

}  // namespace bingo

#endif  // BINGO_CORE_WALK_APPS_H_
