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

#include <map>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "core/error.h"
#include "core/rng.h"
#include "core/verify.h"
#include "test_util.h"

namespace bingo {
namespace {

using testing_util::graph_entries;
using testing_util::graph_step_distribution;
using testing_util::ReferenceGraph;

constexpr const char* kRunningText = "2 1 5\n2 4 4\n2 5 3\n";

GraphOptions directed() {
  GraphOptions o;
  o.directed = true;
  return o;
}

DynGraph running_example() {
  std::istringstream in(kRunningText);
  return load_edge_list(in, directed());
}

void expect_distribution(const DynGraph& g, VertexId u, const std::map<VertexId, double>& want) {
  const std::map<VertexId, double> got = graph_step_distribution(g, u);
  ASSERT_EQ(got.size(), want.size());
  for (const auto& [v, p] : want) {
    ASSERT_TRUE(got.count(v)) << "missing " << v;
    EXPECT_NEAR(got.at(v), p, 1e-12) << "neighbor " << v;
  }
}

TEST(EdgeList, LoadsRunningExample) {
  const DynGraph g = running_example();
  EXPECT_EQ(g.vertex_count(), 6u);
  const NeighborView nb = g.neighbors(2);
  ASSERT_EQ(nb.degree(), 3u);
  EXPECT_EQ(nb.id(0), 1u);
  EXPECT_EQ(nb.id(1), 4u);
  EXPECT_EQ(nb.id(2), 5u);
  EXPECT_EQ(nb.bias(0), 5.0);
  EXPECT_EQ(g.degree(0), 0u);
  expect_distribution(g, 2, {{1, 5.0 / 12}, {4, 4.0 / 12}, {5, 3.0 / 12}});
}

TEST(EdgeList, EmptyInputGivesEmptyGraph) {
  std::istringstream in("");
  EXPECT_EQ(load_edge_list(in).vertex_count(), 0u);
  std::istringstream comments("# nothing\n\n   \n");
  EXPECT_EQ(load_edge_list(comments).vertex_count(), 0u);
}

TEST(EdgeList, MalformedLineReportsLineNumber) {
  std::istringstream in("a b c\n");
  try {
    read_edge_list(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
  std::istringstream third("0 1\n1 2 4 # ok\n3 4 -2\n");
  try {
    read_edge_list(third);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream zero("0 1 0\n");
  EXPECT_THROW(read_edge_list(zero), Error);
}

TEST(EdgeList, RoundTrip) {
  std::istringstream in("0 1 2\n1 2\n2 0 7 # tail comment\n");
  const std::vector<Edge> edges = read_edge_list(in);
  std::ostringstream out;
  write_edge_list(out, edges);
  std::istringstream back(out.str());
  const std::vector<Edge> again = read_edge_list(back);
  ASSERT_EQ(again.size(), edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_EQ(again[i].src, edges[i].src);
    EXPECT_EQ(again[i].dst, edges[i].dst);
    EXPECT_EQ(again[i].bias, edges[i].bias);
  }
}

TEST(DynGraph, InsertIncreasesDegree) {
  DynGraph g = running_example();
  g.insert_edge(2, 3, 3);
  EXPECT_EQ(g.degree(2), 4u);
  EXPECT_TRUE(g.has_edge(2, 3));
  expect_distribution(g, 2, {{1, 5.0 / 15}, {4, 4.0 / 15}, {5, 3.0 / 15}, {3, 3.0 / 15}});
}

TEST(DynGraph, InsertCreatesVertexLazily) {
  DynGraph g(directed());
  g.insert_edge(10, 3, 1);
  EXPECT_EQ(g.vertex_count(), 11u);
  EXPECT_EQ(g.degree(10), 1u);
  EXPECT_EQ(g.degree(3), 0u);
  EXPECT_EQ(g.degree(5), 0u);
}

TEST(DynGraph, DuplicateInsertDoublesMass) {
  DynGraph g(directed());
  const std::uint64_t s1 = g.insert_edge(0, 1, 2);
  g.insert_edge(0, 2, 2);
  const std::uint64_t s2 = g.insert_edge(0, 1, 2);
  EXPECT_LT(s1, s2);
  EXPECT_EQ(g.instance_count(0, 1), 2u);
  expect_distribution(g, 0, {{1, 2.0 / 3}, {2, 1.0 / 3}});
}

TEST(DynGraph, DeleteRemovesOldestInstance) {
  DynGraph g = running_example();
  g.delete_edge(2, 1);
  EXPECT_EQ(g.degree(2), 2u);
  EXPECT_FALSE(g.has_edge(2, 1));
  expect_distribution(g, 2, {{4, 4.0 / 7}, {5, 3.0 / 7}});

  DynGraph d(directed());
  d.insert_edge(0, 1, 1);
  d.insert_edge(0, 1, 3);
  d.delete_edge(0, 1);
  ASSERT_EQ(d.degree(0), 1u);
  EXPECT_EQ(d.neighbors(0).bias(0), 3.0);
  EXPECT_EQ(d.neighbors(0).seq(0), 1u);
}

TEST(DynGraph, DeleteMissingEdgeErrors) {
  DynGraph g = running_example();
  try {
    g.delete_edge(2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSuchEdge);
  }
  EXPECT_THROW(g.delete_edge(99, 1), Error);
  EXPECT_EQ(g.degree(2), 3u);
}

TEST(DynGraph, UpdateBias) {
  DynGraph g = running_example();
  g.update_bias(2, 1, 6);
  expect_distribution(g, 2, {{1, 6.0 / 13}, {4, 4.0 / 13}, {5, 3.0 / 13}});
  g.update_bias(2, 4, 4);
  expect_distribution(g, 2, {{1, 6.0 / 13}, {4, 4.0 / 13}, {5, 3.0 / 13}});
  EXPECT_THROW(g.update_bias(2, 3, 1), Error);
  EXPECT_THROW(g.update_bias(2, 1, 0), Error);
  expect_distribution(g, 2, {{1, 6.0 / 13}, {4, 4.0 / 13}, {5, 3.0 / 13}});
}

TEST(DynGraph, NeighborViewErrors) {
  const DynGraph g = running_example();
  try {
    g.neighbors(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVertex);
  }
  EXPECT_EQ(g.neighbors(0).degree(), 0u);
}

TEST(DynGraph, UndirectedEdgesAreMirrored) {
  DynGraph g;
  g.insert_edge(0, 1, 3);
  g.insert_edge(1, 2, 1);
  g.insert_edge(2, 2, 5);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_EQ(g.instance_count(2, 2), 1u);
  EXPECT_EQ(g.entry_count(), 5u);
  g.delete_edge(1, 0);
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.live_edges().size(), 2u);
}

TEST(DynGraph, LiveEdgesInSequenceOrder) {
  DynGraph g;
  g.insert_edge(3, 1, 2);
  g.insert_edge(0, 2, 1);
  g.insert_edge(1, 3, 4);
  g.delete_edge(1, 3);
  const std::vector<Edge> live = g.live_edges();
  ASSERT_EQ(live.size(), 2u);
  EXPECT_EQ(live[0].dst, 2u);
  EXPECT_EQ(live[1].bias, 4.0);
}

TEST(DynGraph, FromEdgesMatchesIncrementalInserts) {
  Rng rng(3);
  std::vector<Edge> edges;
  for (int i = 0; i < 500; ++i) {
    edges.push_back({static_cast<VertexId>(rng.uniform_index(40)),
                     static_cast<VertexId>(rng.uniform_index(40)),
                     static_cast<double>(1 + rng.uniform_index(100))});
  }
  for (bool dir : {true, false}) {
    GraphOptions o;
    o.directed = dir;
    const DynGraph built = DynGraph::from_edges(edges, o);
    DynGraph grown(o);
    for (const Edge& e : edges) grown.insert_edge(e.src, e.dst, e.bias);
    ASSERT_EQ(built.vertex_count(), grown.vertex_count());
    for (VertexId u = 0; u < built.vertex_count(); ++u) {
      ASSERT_EQ(graph_entries(built, u), graph_entries(grown, u));
    }
    EXPECT_TRUE(scratch_equivalence(built).ok());
    EXPECT_EQ(built.next_sequence(), edges.size());
  }
}

// Random streaming updates checked against the sequential multigraph oracle.
TEST(DynGraph, StreamingMatchesReferenceGraph) {
  Rng rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const bool dir = trial % 2 == 0;
    GraphOptions o;
    o.directed = dir;
    o.mode = trial % 4 < 2 ? BiasMode::kInteger : BiasMode::kFloat;
    DynGraph g(o);
    ReferenceGraph ref(dir);
    constexpr VertexId kN = 12;
    for (int step = 0; step < 400; ++step) {
      const VertexId u = static_cast<VertexId>(rng.uniform_index(kN));
      const VertexId v = static_cast<VertexId>(rng.uniform_index(kN));
      if (rng.uniform_real() < 0.55) {
        const double w = o.mode == BiasMode::kInteger ? static_cast<double>(1 + rng.uniform_index(50))
                                                      : 0.1 + 10.0 * rng.uniform_real();
        g.insert_edge(u, v, w);
        ref.insert(u, v, w);
      } else if (ref.count(u, v) > 0) {
        g.delete_edge(u, v);
        ref.erase(u, v);
      } else {
        EXPECT_THROW(g.delete_edge(u, v), Error);
      }
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      ASSERT_EQ(graph_entries(g, u), ref.entries(u)) << "vertex " << u;
    }
    const EquivalenceReport rep = scratch_equivalence(g);
    ASSERT_TRUE(rep.ok()) << rep.to_text();
  }
}

TEST(DynGraph, MemoryAndKindCountsAggregateVertices) {
  const DynGraph g = running_example();
  EXPECT_EQ(g.memory_slots(), g.sampler(2).memory_slots());
  const std::array<std::size_t, 5> counts = g.group_kind_counts();
  EXPECT_EQ(counts[static_cast<int>(GroupKind::kDense)], 2u);
  EXPECT_EQ(counts[static_cast<int>(GroupKind::kOneElement)], 1u);
}

}  // namespace
}  // namespace bingo
