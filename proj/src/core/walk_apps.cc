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

#include "core/walk_apps.h"

#include <cmath>

#include "core/error.h"

namespace bingo {
namespace {

void check_starts(const DynGraph& g, std::span<const VertexId> starts) {
  for (VertexId s : starts) {
    if (s >= g.vertex_count()) {
      throw Error(ErrorCode::kUnknownVertex, "unknown start vertex " + std::to_string(s));
    }
  }
}

// Runs fn(i, rng) for every walker with its own substream.
template <class Fn>
void for_each_walker(std::size_t count, std::uint64_t seed, Fn&& fn) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(i));
    fn(static_cast<std::size_t>(i), rng);
  }
}

}  // namespace

std::vector<VertexId> default_starts(const DynGraph& g, std::uint32_t walkers_per_vertex) {
  std::vector<VertexId> starts;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) == 0) continue;
    for (std::uint32_t k = 0; k < walkers_per_vertex; ++k) starts.push_back(u);
  }
  return starts;
}

std::vector<Walk> deepwalk_walks(const DynGraph& g, std::span<const VertexId> starts,
                                 std::uint32_t walk_length, std::uint64_t seed) {
  check_starts(g, starts);
  std::vector<Walk> walks(starts.size());
  for_each_walker(starts.size(), seed, [&](std::size_t i, Rng& rng) {
    Walk& w = walks[i];
    w.vertices.reserve(walk_length + 1);
    VertexId cur = starts[i];
    w.vertices.push_back(cur);
    for (std::uint32_t step = 0; step < walk_length; ++step) {
      if (g.degree(cur) == 0) {
        w.truncated = true;
        break;
      }
      cur = g.sample_neighbor(cur, rng);
      w.vertices.push_back(cur);
    }
  });
  return walks;
}

double node2vec_factor(const DynGraph& g, VertexId prev, VertexId candidate, double p,
                       double q) {
  if (candidate == prev) return 1.0 / p;
  if (g.has_edge(prev, candidate)) return 1.0;
  return 1.0 / q;
}

std::vector<Walk> node2vec_walks(const DynGraph& g, std::span<const VertexId> starts,
                                 std::uint32_t walk_length, double p, double q,
                                 std::uint64_t seed) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw Error(ErrorCode::kInvalidArgument, "node2vec p and q must be positive");
  }
  check_starts(g, starts);
  std::vector<Walk> walks(starts.size());
  for_each_walker(starts.size(), seed, [&](std::size_t i, Rng& rng) {
    Walk& w = walks[i];
    w.vertices.reserve(walk_length + 1);
    VertexId prev = starts[i];
    VertexId cur = prev;
    w.vertices.push_back(cur);
    for (std::uint32_t step = 0; step < walk_length; ++step) {
      if (g.degree(cur) == 0) {
        w.truncated = true;
        break;
      }
      const VertexId next =
          step == 0 ? g.sample_neighbor(cur, rng) : node2vec_step(g, prev, cur, p, q, rng);
      prev = cur;
      cur = next;
      w.vertices.push_back(cur);
    }
  });
  return walks;
}

PprResult ppr_walks(const DynGraph& g, std::span<const VertexId> sources,
                    double termination_prob, std::uint64_t seed, bool keep_walks) {
  if (!(termination_prob > 0.0) || termination_prob > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "termination probability must be in (0, 1]");
  }
  check_starts(g, sources);
  PprResult result;
  result.steps.assign(sources.size(), 0);
  if (keep_walks) result.walks.resize(sources.size());
  std::vector<std::vector<std::uint64_t>> local_visits;

#pragma omp parallel
  {
    std::vector<std::uint64_t> visits(g.vertex_count(), 0);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(sources.size());
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(i));
      Walk* w = keep_walks ? &result.walks[i] : nullptr;
      VertexId cur = sources[i];
      ++visits[cur];
      if (w) w->vertices.push_back(cur);
      std::uint32_t steps = 0;
      for (;;) {
        if (g.degree(cur) == 0) {
          if (w) w->truncated = true;
          break;
        }
        cur = g.sample_neighbor(cur, rng);
        ++steps;
        ++visits[cur];
        if (w) w->vertices.push_back(cur);
        if (rng.uniform_real() < termination_prob) break;
      }
      result.steps[i] = steps;
    }
#pragma omp critical
    local_visits.push_back(std::move(visits));
  }

  result.visits.assign(g.vertex_count(), 0);
  for (const auto& v : local_visits) {
    for (std::size_t u = 0; u < v.size(); ++u) result.visits[u] += v[u];
  }
  return result;
}

void write_walks(std::ostream& out, std::span<const Walk> walks) {
  for (const Walk& w : walks) {
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
      if (i) out << ' ';
      out << w.vertices[i];
    }
    out << '\n';
  }
}

void write_visits(std::ostream& out, std::span<const std::uint64_t> visits) {
  for (std::size_t u = 0; u < visits.size(); ++u) {
    if (visits[u]) out << u << ' ' << visits[u] << '\n';
  }
}

}  // namespace bingo
