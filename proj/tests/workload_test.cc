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
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "core/error.h"

namespace bingo {
namespace {

std::vector<Edge> numbered_edges(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1000), 1.0 + i});
  }
  return edges;
}

using EdgeKey = std::pair<VertexId, VertexId>;

TEST(UpdateStream, SplitSizes) {
  const std::vector<Edge> edges = numbered_edges(20);
  const UpdateWorkload w = generate_update_stream(edges, 1, StreamMode::kMixed, 7);
  EXPECT_EQ(w.initial.size(), 10u);
  EXPECT_EQ(w.updates.size(), 10u);
  for (std::size_t t = 0; t < w.updates.size(); ++t) EXPECT_EQ(w.updates[t].seq, t);
}

TEST(UpdateStream, ReplaysAgainstLiveAndPoolSets) {
  const std::vector<Edge> edges = numbered_edges(500);
  for (StreamMode mode : {StreamMode::kInsertion, StreamMode::kDeletion, StreamMode::kMixed}) {
    const UpdateWorkload w = generate_update_stream(edges, 20, mode, 3);
    std::set<EdgeKey> live;
    for (const Edge& e : w.initial) live.insert({e.src, e.dst});
    std::set<EdgeKey> all;
    for (const Edge& e : edges) all.insert({e.src, e.dst});
    std::set<EdgeKey> pool;
    std::set_difference(all.begin(), all.end(), live.begin(), live.end(),
                        std::inserter(pool, pool.end()));
    ASSERT_EQ(pool.size(), 200u);
    std::size_t inserts = 0;
    for (const EdgeUpdate& u : w.updates) {
      const EdgeKey k{u.src, u.dst};
      if (u.op == UpdateOp::kInsert) {
        ASSERT_EQ(pool.erase(k), 1u) << "insert of an edge not in the pool";
        live.insert(k);
        ++inserts;
      } else {
        ASSERT_EQ(live.erase(k), 1u) << "delete of an edge that is not live";
      }
    }
    if (mode == StreamMode::kInsertion) {
      EXPECT_EQ(inserts, 200u);
    }
    if (mode == StreamMode::kDeletion) {
      EXPECT_EQ(inserts, 0u);
    }
    if (mode == StreamMode::kMixed) {
      EXPECT_GT(inserts, 60u);
      EXPECT_LT(inserts, 140u);
    }
  }
}

TEST(UpdateStream, DeterministicPerSeed) {
  const std::vector<Edge> edges = numbered_edges(300);
  std::ostringstream a;
  std::ostringstream b;
  write_update_stream(a, generate_update_stream(edges, 10, StreamMode::kMixed, 42).updates);
  write_update_stream(b, generate_update_stream(edges, 10, StreamMode::kMixed, 42).updates);
  EXPECT_EQ(a.str(), b.str());
  std::ostringstream c;
  write_update_stream(c, generate_update_stream(edges, 10, StreamMode::kMixed, 43).updates);
  EXPECT_NE(a.str(), c.str());
}

TEST(UpdateStream, LargeBatchHoldsBackTenTimesBatchsize) {
  const std::vector<Edge> edges = numbered_edges(1000001);
  const UpdateWorkload w = generate_update_stream(edges, 100000, StreamMode::kInsertion, 1);
  EXPECT_EQ(w.initial.size(), 1u);
  EXPECT_EQ(w.updates.size(), 1000000u);
}

TEST(UpdateStream, Errors) {
  const std::vector<Edge> edges = numbered_edges(15);
  try {
    generate_update_stream(edges, 1, StreamMode::kDeletion, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
    EXPECT_STREQ(e.what(), "workload infeasible");
  }
  EXPECT_NO_THROW(generate_update_stream(edges, 1, StreamMode::kInsertion, 0));
  EXPECT_THROW(generate_update_stream(numbered_edges(10), 1, StreamMode::kMixed, 0), Error);
  EXPECT_THROW(generate_update_stream(edges, 0, StreamMode::kMixed, 0), Error);
  EXPECT_THROW(parse_stream_mode("sideways"), Error);
  EXPECT_EQ(parse_stream_mode("mixed"), StreamMode::kMixed);
  EXPECT_STREQ(stream_mode_name(StreamMode::kDeletion), "deletion");
}

TEST(UpdateStream, TextRoundTrip) {
  const std::vector<EdgeUpdate> updates = {{UpdateOp::kInsert, 1, 2, 2.5, 0},
                                           {UpdateOp::kDelete, 3, 4, 1.0, 7}};
  std::ostringstream out;
  write_update_stream(out, updates);
  EXPECT_EQ(out.str(), "I 1 2 2.5 0\nD 3 4 7\n");
  std::istringstream in(out.str());
  const std::vector<EdgeUpdate> back = read_update_stream(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].op, UpdateOp::kInsert);
  EXPECT_EQ(back[0].bias, 2.5);
  EXPECT_EQ(back[1].op, UpdateOp::kDelete);
  EXPECT_EQ(back[1].seq, 7u);

  std::istringstream bad("I 1 2 3 0\nX 1 2\n");
  try {
    read_update_stream(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Biases, UniformMean) {
  const std::vector<double> b = generate_biases(100000, BiasDistribution::kUniform, {}, 11);
  ASSERT_EQ(b.size(), 100000u);
  double sum = 0.0;
  for (double x : b) {
    ASSERT_GE(x, 1.0);
    ASSERT_LE(x, 8.0);
    ASSERT_EQ(x, std::floor(x));
    sum += x;
  }
  EXPECT_NEAR(sum / b.size(), 4.5, 0.05);
}

TEST(Biases, ExponentialIsPositiveInteger) {
  BiasParams params;
  params.exponential_rate = 0.5;
  const std::vector<double> b = generate_biases(100000, BiasDistribution::kExponential, params, 2);
  double sum = 0.0;
  for (double x : b) {
    ASSERT_GE(x, 1.0);
    ASSERT_EQ(x, std::floor(x));
    sum += x;
  }
  // round(X) + 1 for X ~ Exp(1/2): E = 1 + sum_k P(X >= k - 1/2) = 1 + e^{-1/4} / (1 - e^{-1/2}).
  const double want = 1.0 + std::exp(-0.25) / (1.0 - std::exp(-0.5));
  EXPECT_NEAR(sum / b.size(), want, 0.03);
}

TEST(Biases, EmptyAndInvalid) {
  EXPECT_TRUE(generate_biases(0, BiasDistribution::kUniform, {}, 0).empty());
  BiasParams bad;
  bad.uniform_max = 0;
  EXPECT_THROW(generate_biases(5, BiasDistribution::kUniform, bad, 0), Error);
  EXPECT_THROW(generate_biases(5, BiasDistribution::kDegreePowerLaw, {}, 0), Error);
  EXPECT_THROW(parse_bias_distribution("gaussian"), Error);
}

TEST(Biases, DegreeOfDestination) {
  const std::vector<Edge> edges = {{2, 1, 5}, {2, 4, 4}, {2, 5, 3}, {4, 5, 1}};
  const std::vector<double> b = degree_biases(edges);
  // Endpoint counts: 1 -> 1, 2 -> 3, 4 -> 2, 5 -> 2.
  EXPECT_EQ(b, (std::vector<double>{1, 2, 2, 2}));
  std::vector<Edge> copy = edges;
  assign_biases(copy, b);
  EXPECT_EQ(copy[1].bias, 2.0);
}

TEST(PowerLawGraph, ShapeAndSkew) {
  const std::vector<Edge> edges = generate_powerlaw_graph(2000, 20000, 2.1, 5);
  ASSERT_EQ(edges.size(), 20000u);
  std::map<VertexId, std::size_t> degree;
  for (const Edge& e : edges) {
    ASSERT_NE(e.src, e.dst);
    ASSERT_LT(e.src, 2000u);
    ASSERT_LT(e.dst, 2000u);
    ASSERT_EQ(e.bias, 1.0);
    ++degree[e.src];
    ++degree[e.dst];
  }
  std::size_t max_degree = 0;
  for (const auto& [v, d] : degree) max_degree = std::max(max_degree, d);
  // Mean degree is 20; a heavy tail puts the hub far above it.
  EXPECT_GT(max_degree, 200u);
  const std::vector<Edge> again = generate_powerlaw_graph(2000, 20000, 2.1, 5);
  EXPECT_EQ(again.front().src, edges.front().src);
  EXPECT_EQ(again.back().dst, edges.back().dst);
}

}  // namespace
}  // namespace bingo
