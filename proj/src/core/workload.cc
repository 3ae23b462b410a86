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

#include "core/workload.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string_view>

#include "core/alias_table.h"
#include "core/error.h"
#include "core/rng.h"

namespace bingo {

StreamMode parse_stream_mode(const std::string& name) {
  if (name == "insertion") return StreamMode::kInsertion;
  if (name == "deletion") return StreamMode::kDeletion;
  if (name == "mixed") return StreamMode::kMixed;
  throw Error(ErrorCode::kInvalidArgument, "unknown update mode '" + name + "'");
}

const char* stream_mode_name(StreamMode mode) {
  switch (mode) {
    case StreamMode::kInsertion:
      return "insertion";
    case StreamMode::kDeletion:
      return "deletion";
    case StreamMode::kMixed:
      return "mixed";
  }
  return "?";
}

UpdateWorkload generate_update_stream(std::span<const Edge> edges, std::size_t batchsize,
                                      StreamMode mode, std::uint64_t seed) {
  const std::size_t events = 10 * batchsize;
  if (batchsize == 0 || edges.size() <= events) {
    throw Error(ErrorCode::kInvalidArgument,
                "need more than 10 * batchsize edges (have " + std::to_string(edges.size()) +
                    ")");
  }
  Rng rng(seed);
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::swap(order[i], order[rng.uniform_index(i + 1)]);
  }

  const std::size_t split = edges.size() - events;
  UpdateWorkload w;
  w.initial.reserve(split);
  std::vector<Edge> live;
  std::vector<Edge> pool;
  live.reserve(edges.size());
  pool.reserve(events);
  for (std::size_t i = 0; i < order.size(); ++i) {
    (i < split ? live : pool).push_back(edges[order[i]]);
  }
  w.initial = live;

  auto take = [&](std::vector<Edge>& from) {
    const std::size_t k = rng.uniform_index(from.size());
    const Edge e = from[k];
    from[k] = from.back();
    from.pop_back();
    return e;
  };

  w.updates.reserve(events);
  for (std::size_t t = 0; t < events; ++t) {
    bool insert = mode == StreamMode::kInsertion;
    if (mode == StreamMode::kMixed) {
      insert = rng.uniform_real() < 0.5;
      if (insert && pool.empty()) insert = false;
      if (!insert && live.empty()) insert = true;
    }
    if ((insert && pool.empty()) || (!insert && live.empty())) {
      throw Error(ErrorCode::kInfeasible, "workload infeasible");
    }
    EdgeUpdate u;
    u.seq = t;
    if (insert) {
      const Edge e = take(pool);
      live.push_back(e);
      u.op = UpdateOp::kInsert;
      u.src = e.src;
      u.dst = e.dst;
      u.bias = e.bias;
    } else {
      const Edge e = take(live);
      u.op = UpdateOp::kDelete;
      u.src = e.src;
      u.dst = e.dst;
    }
    w.updates.push_back(u);
  }
  return w;
}

void write_update_stream(std::ostream& out, std::span<const EdgeUpdate> updates) {
  char buf[64];
  for (const EdgeUpdate& u : updates) {
    if (u.op == UpdateOp::kInsert) {
      auto res = std::to_chars(buf, buf + sizeof(buf), u.bias);
      out << "I " << u.src << ' ' << u.dst << ' ' << std::string_view(buf, res.ptr - buf) << ' '
          << u.seq << '\n';
    } else {
      out << "D " << u.src << ' ' << u.dst << ' ' << u.seq << '\n';
    }
  }
}

std::vector<EdgeUpdate> read_update_stream(std::istream& in) {
  std::vector<EdgeUpdate> updates;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    std::string_view tokens[6];
    int count = 0;
    std::size_t pos = 0;
    while (count < 6) {
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
    auto parse = [&](std::string_view tok, auto& out) {
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail("bad field '" + std::string(tok) + "'");
      }
    };
    EdgeUpdate u;
    if (tokens[0] == "I" && count == 5) {
      u.op = UpdateOp::kInsert;
      parse(tokens[3], u.bias);
      parse(tokens[4], u.seq);
    } else if (tokens[0] == "D" && count == 4) {
      u.op = UpdateOp::kDelete;
      parse(tokens[3], u.seq);
    } else {
      fail("expected 'I src dst bias seq' or 'D src dst seq'");
    }
    parse(tokens[1], u.src);
    parse(tokens[2], u.dst);
    updates.push_back(u);
  }
  return updates;
}

BiasDistribution parse_bias_distribution(const std::string& name) {
  if (name == "degree") return BiasDistribution::kDegreePowerLaw;
  if (name == "uniform") return BiasDistribution::kUniform;
  if (name == "exponential") return BiasDistribution::kExponential;
  throw Error(ErrorCode::kInvalidArgument, "unknown bias distribution '" + name + "'");
}

std::vector<double> generate_biases(std::size_t count, BiasDistribution dist,
                                    const BiasParams& params, std::uint64_t seed) {
  std::vector<double> biases;
  if (count == 0) return biases;
  Rng rng(seed);
  biases.reserve(count);
  switch (dist) {
    case BiasDistribution::kUniform:
      if (params.uniform_max == 0) {
        throw Error(ErrorCode::kInvalidArgument, "uniform bias maximum must be positive");
      }
      for (std::size_t i = 0; i < count; ++i) {
        biases.push_back(static_cast<double>(rng.uniform_index(params.uniform_max) + 1));
      }
      break;
    case BiasDistribution::kExponential: {
      if (!(params.exponential_rate > 0.0) || !std::isfinite(params.exponential_rate)) {
        throw Error(ErrorCode::kInvalidArgument, "exponential rate must be positive");
      }
      for (std::size_t i = 0; i < count; ++i) {
        const double x = -std::log1p(-rng.uniform_real()) / params.exponential_rate;
        biases.push_back(std::round(x) + 1.0);
      }
      break;
    }
    case BiasDistribution::kDegreePowerLaw:
      throw Error(ErrorCode::kInvalidArgument, "degree biases are derived from the graph");
  }
  return biases;
}

std::vector<double> degree_biases(std::span<const Edge> edges) {
  std::vector<std::uint64_t> degree;
  for (const Edge& e : edges) {
    const std::size_t top = std::max(e.src, e.dst);
    if (degree.size() <= top) degree.resize(top + 1, 0);
    ++degree[e.src];
    ++degree[e.dst];
  }
  std::vector<double> biases;
  biases.reserve(edges.size());
  for (const Edge& e : edges) biases.push_back(static_cast<double>(degree[e.dst]));
  return biases;
}

void assign_biases(std::span<Edge> edges, std::span<const double> biases) {
  if (edges.size() != biases.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bias count does not match edge count");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].bias = biases[i];
}

std::vector<Edge> generate_powerlaw_graph(std::size_t vertices, std::size_t edges, double gamma,
                                          std::uint64_t seed) {
  if (vertices < 2 || !(gamma > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "power-law graph needs >= 2 vertices and gamma > 1");
  }
  std::vector<double> weight(vertices);
  const double exponent = -1.0 / (gamma - 1.0);
  for (std::size_t i = 0; i < vertices; ++i) {
    weight[i] = std::pow(static_cast<double>(i + 1), exponent);
  }
  AliasTable table;
  table.assign(weight);
  Rng rng(seed);
  std::vector<Edge> out;
  out.reserve(edges);
  while (out.size() < edges) {
    const auto u = static_cast<VertexId>(table.sample(rng));
    const auto v = static_cast<VertexId>(table.sample(rng));
    if (u != v) out.push_back(Edge{u, v, 1.0});
  }
  return out;
}

}  // namespace bingo
