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

#include "core/dyn_graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

#include "core/error.h"

namespace bingo {
namespace {

void validate_bias(const GraphOptions& options, double bias) {
  if (options.mode == BiasMode::kInteger) {
    integer_bias(bias);
  } else if (!std::isfinite(bias) || bias <= 0.0) {
    throw Error(ErrorCode::kInvalidBias, "invalid bias: must be positive and finite");
  }
}

}  // namespace

DynGraph::DynGraph(GraphOptions options)
    : options_(options), pool_(std::make_unique<BlockPool>()) {}

DynGraph::DynGraph(DynGraph&& other) noexcept
    : options_(other.options_),
      pool_(std::move(other.pool_)),
      vertices_(std::move(other.vertices_)),
      next_seq_(other.next_seq_.load()) {}

DynGraph& DynGraph::operator=(DynGraph&& other) noexcept {
  if (this != &other) {
    // Vertices reference the pool, so release them before the pool changes hands.
    vertices_ = std::move(other.vertices_);
    pool_ = std::move(other.pool_);
    options_ = other.options_;
    next_seq_.store(other.next_seq_.load());
  }
  return *this;
}

DynGraph DynGraph::from_edges(std::span<const Edge> edges, GraphOptions options) {
  DynGraph g(options);
  VertexId max_id = 0;
  for (const Edge& e : edges) max_id = std::max({max_id, e.src, e.dst});
  if (edges.empty()) return g;

  std::vector<std::vector<Neighbor>> lists(static_cast<std::size_t>(max_id) + 1);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const Edge& e = edges[j];
    validate_bias(options, e.bias);
    lists[e.src].push_back(Neighbor{e.dst, e.bias, j});
    if (!options.directed && e.src != e.dst) lists[e.dst].push_back(Neighbor{e.src, e.bias, j});
  }

  g.vertices_.reserve(lists.size());
  for (std::vector<Neighbor>& list : lists) {
    Vertex& v = g.vertices_.emplace_back(
        VertexSampler::build(list, options.sampler_options(), g.pool_.get()));
    for (std::uint32_t i = 0; i < list.size(); ++i) v.instances[list[i].id].push_back(i);
    std::vector<Neighbor>().swap(list);
  }
  g.next_seq_.store(edges.size());
  return g;
}

void DynGraph::ensure_vertex(VertexId u) {
  if (u < vertices_.size()) return;
  vertices_.reserve(std::max<std::size_t>(u + 1, vertices_.size() * 2));
  while (vertices_.size() <= u) {
    vertices_.emplace_back(VertexSampler(options_.sampler_options(), pool_.get()));
  }
}

void DynGraph::reserve_vertices(std::size_t n) {
  if (n > 0) ensure_vertex(static_cast<VertexId>(n - 1));
}

void DynGraph::insert_half(VertexId src, VertexId dst, double bias, std::uint64_t seq,
                           UpdateMode mode) {
  Vertex& v = vertices_[src];
  v.sampler.insert(dst, bias, seq, mode);
  v.instances[dst].push_back(v.sampler.degree() - 1);
}

void DynGraph::repoint_instance(Vertex& v, std::uint32_t from, std::uint32_t to) {
  InstanceList& list = v.instances[v.sampler.neighbor_id(to)];
  *std::find(list.begin(), list.end(), from) = to;
}

void DynGraph::delete_half(VertexId src, VertexId dst, UpdateMode mode) {
  Vertex& v = vertices_[src];
  auto it = v.instances.find(dst);
  if (it == v.instances.end()) throw Error(ErrorCode::kNoSuchEdge, "no such edge");
  const std::uint32_t index = it->second.front();
  it->second.erase(it->second.begin());
  if (it->second.empty()) v.instances.erase(it);
  const EraseResult result = v.sampler.erase(index, mode);
  if (result.moved_from) repoint_instance(v, *result.moved_from, index);
}

std::uint64_t DynGraph::insert_edge(VertexId src, VertexId dst, double bias) {
  validate_bias(options_, bias);
  ensure_vertex(std::max(src, dst));
  const std::uint64_t seq = next_seq_.fetch_add(1, std::memory_order_relaxed);
  insert_half(src, dst, bias, seq, UpdateMode::kStreaming);
  if (!options_.directed && src != dst) {
    try {
      insert_half(dst, src, bias, seq, UpdateMode::kStreaming);
    } catch (...) {
      // Undo the first half so both directions stay in step.
      Vertex& v = vertices_[src];
      auto it = v.instances.find(dst);
      it->second.pop_back();
      if (it->second.empty()) v.instances.erase(it);
      v.sampler.erase(v.sampler.degree() - 1);
      throw;
    }
  }
  return seq;
}

void DynGraph::delete_edge(VertexId src, VertexId dst) {
  if (instance_count(src, dst) == 0) throw Error(ErrorCode::kNoSuchEdge, "no such edge");
  delete_half(src, dst, UpdateMode::kStreaming);
  if (!options_.directed && src != dst) delete_half(dst, src, UpdateMode::kStreaming);
}

void DynGraph::update_bias(VertexId src, VertexId dst, double new_bias) {
  if (instance_count(src, dst) == 0) throw Error(ErrorCode::kNoSuchEdge, "no such edge");
  validate_bias(options_, new_bias);
  delete_edge(src, dst);
  insert_edge(src, dst, new_bias);
}

NeighborView DynGraph::neighbors(VertexId u) const { return NeighborView(sampler(u)); }

const VertexSampler& DynGraph::sampler(VertexId u) const {
  if (u >= vertices_.size()) {
    throw Error(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(u));
  }
  return vertices_[u].sampler;
}

bool DynGraph::has_edge(VertexId u, VertexId v) const {
  return u < vertices_.size() && vertices_[u].instances.contains(v);
}

std::size_t DynGraph::instance_count(VertexId u, VertexId v) const {
  if (u >= vertices_.size()) return 0;
  auto it = vertices_[u].instances.find(v);
  return it == vertices_[u].instances.end() ? 0 : it->second.size();
}

std::vector<std::uint32_t> DynGraph::instances(VertexId u, VertexId v) const {
  if (u >= vertices_.size()) return {};
  auto it = vertices_[u].instances.find(v);
  if (it == vertices_[u].instances.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<Edge> DynGraph::live_edges() const {
  std::vector<std::pair<std::uint64_t, Edge>> tagged;
  for (VertexId u = 0; u < vertices_.size(); ++u) {
    const VertexSampler& s = vertices_[u].sampler;
    for (std::uint32_t i = 0; i < s.degree(); ++i) {
      const VertexId v = s.neighbor_id(i);
      if (!options_.directed && v < u) continue;
      tagged.emplace_back(s.neighbor_seq(i), Edge{u, v, s.neighbor_bias(i)});
    }
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Edge> edges;
  edges.reserve(tagged.size());
  for (const auto& [seq, e] : tagged) edges.push_back(e);
  return edges;
}

std::size_t DynGraph::entry_count() const {
  std::size_t n = 0;
  for (const Vertex& v : vertices_) n += v.sampler.degree();
  return n;
}

std::size_t DynGraph::memory_slots() const {
  std::size_t n = 0;
  for (const Vertex& v : vertices_) n += v.sampler.memory_slots();
  return n;
}

std::array<std::size_t, 5> DynGraph::group_kind_counts() const {
  std::array<std::size_t, 5> counts{};
  for (const Vertex& v : vertices_) {
    for (int k = 0; k < 5; ++k) counts[k] += v.sampler.kind_count(static_cast<GroupKind>(k));
  }
  return counts;
}

std::vector<Edge> read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);

    std::string_view tokens[4];
    int count = 0;
    std::size_t pos = 0;
    while (count < 4) {
      pos = view.find_first_not_of(" \t\r", pos);
      if (pos == std::string_view::npos) break;
      const std::size_t end = std::min(view.find_first_of(" \t\r", pos), view.size());
      tokens[count++] = view.substr(pos, end - pos);
      pos = end;
    }
    if (count == 0) continue;

    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + why);
    };
    if (count < 2 || count > 3) fail("expected 'src dst [bias]'");
    Edge e;
    auto parse_id = [&](std::string_view tok, VertexId& out) {
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("bad vertex id '" + std::string(tok) + "'");
    };
    parse_id(tokens[0], e.src);
    parse_id(tokens[1], e.dst);
    if (count == 3) {
      auto [ptr, ec] = std::from_chars(tokens[2].data(), tokens[2].data() + tokens[2].size(), e.bias);
      if (ec != std::errc() || ptr != tokens[2].data() + tokens[2].size()) {
        fail("bad bias '" + std::string(tokens[2]) + "'");
      }
      if (!std::isfinite(e.bias) || e.bias <= 0.0) fail("bias must be positive");
    }
    edges.push_back(e);
  }
  return edges;
}

std::vector<Edge> read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_edge_list(in);
}

DynGraph load_edge_list(std::istream& in, GraphOptions options) {
  return DynGraph::from_edges(read_edge_list(in), options);
}

void write_edge_list(std::ostream& out, std::span<const Edge> edges) {
  char buf[64];
  for (const Edge& e : edges) {
    auto res = std::to_chars(buf, buf + sizeof(buf), e.bias);
    out << e.src << ' ' << e.dst << ' ' << std::string_view(buf, res.ptr - buf) << '\n';
  }
}

}  // namespace bingo
