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

#include "bingo/bingo.h"

#include <omp.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "core/batch_update.h"
#include "core/dyn_graph.h"
#include "core/error.h"
#include "core/verify.h"
#include "core/walk_apps.h"
#include "core/workload.h"

struct bingo_graph {
  bingo::DynGraph graph;
};

struct bingo_edges {
  std::vector<bingo::Edge> edges;
};

struct bingo_updates {
  std::vector<bingo::EdgeUpdate> updates;
};

struct bingo_walks {
  std::vector<bingo::Walk> walks;
  std::vector<std::uint64_t> visits;
  std::uint64_t total_steps = 0;
};

namespace {

thread_local std::string last_error;

bingo_status to_status(bingo::ErrorCode code) {
  using bingo::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return BINGO_ERR_INVALID_ARGUMENT;
    case ErrorCode::kInvalidBias: return BINGO_ERR_INVALID_BIAS;
    case ErrorCode::kZeroBias: return BINGO_ERR_ZERO_BIAS;
    case ErrorCode::kDegenerate: return BINGO_ERR_DEGENERATE;
    case ErrorCode::kLambdaOverflow: return BINGO_ERR_LAMBDA_OVERFLOW;
    case ErrorCode::kEmptyVertex: return BINGO_ERR_EMPTY_VERTEX;
    case ErrorCode::kNoSuchEdge: return BINGO_ERR_NO_SUCH_EDGE;
    case ErrorCode::kUnknownVertex: return BINGO_ERR_UNKNOWN_VERTEX;
    case ErrorCode::kParse: return BINGO_ERR_PARSE;
    case ErrorCode::kIo: return BINGO_ERR_IO;
    case ErrorCode::kInfeasible: return BINGO_ERR_INFEASIBLE;
    case ErrorCode::kBinTooSmall: return BINGO_ERR_BIN_TOO_SMALL;
  }
  return BINGO_ERR_INTERNAL;
}

bingo_status fail(bingo_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
bingo_status guarded(Fn&& fn) {
  try {
    fn();
    return BINGO_OK;
  } catch (const bingo::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BINGO_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BINGO_ERR_INTERNAL, e.what());
  }
}

#define BINGO_REQUIRE(cond, what)                               \
  do {                                                          \
    if (!(cond)) return fail(BINGO_ERR_INVALID_ARGUMENT, what); \
  } while (0)

bingo::GraphOptions to_options(const bingo_graph_options* in) {
  bingo_graph_options o;
  bingo_graph_options_init(&o);
  if (in) o = *in;
  bingo::GraphOptions out;
  out.directed = o.directed != 0;
  out.mode = o.float_bias ? bingo::BiasMode::kFloat : bingo::BiasMode::kInteger;
  out.adaptive = o.adaptive != 0;
  out.thresholds.alpha = o.alpha;
  out.thresholds.beta = o.beta;
  // Constructing a sampler validates the thresholds up front.
  bingo::VertexSampler probe(out.sampler_options());
  return out;
}

void copy_message(char* dst, std::size_t cap, const std::string& src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

void fill_stats(const bingo::BatchStats& s, bingo_batch_stats* out) {
  std::memset(out, 0, sizeof(*out));
  out->updates = s.updates;
  out->inserts = s.inserts;
  out->deletes = s.deletes;
  out->errors = s.errors;
  out->touched_vertices = s.touched_vertices;
  out->rebuilds = s.rebuilds;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out->transitions[i][j] = s.transitions.counts[i][j];
  }
  out->seconds = s.seconds;
  if (!s.error_messages.empty()) {
    copy_message(out->first_error, sizeof(out->first_error), s.error_messages.front());
  }
}

template <class T>
void write_file(const char* path, T&& writer) {
  std::ofstream out(path);
  if (!out) throw bingo::Error(bingo::ErrorCode::kIo, std::string("cannot open ") + path);
  writer(out);
  out.flush();
  if (!out) throw bingo::Error(bingo::ErrorCode::kIo, std::string("cannot write ") + path);
}

}  // namespace

extern "C" {

const char* bingo_version(void) { return "0.1.0"; }

const char* bingo_status_name(bingo_status status) {
  switch (status) {
    case BINGO_OK: return "ok";
    case BINGO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BINGO_ERR_INVALID_BIAS: return "invalid bias";
    case BINGO_ERR_ZERO_BIAS: return "zero bias";
    case BINGO_ERR_DEGENERATE: return "degenerate distribution";
    case BINGO_ERR_LAMBDA_OVERFLOW: return "lambda overflow";
    case BINGO_ERR_EMPTY_VERTEX: return "empty vertex";
    case BINGO_ERR_NO_SUCH_EDGE: return "no such edge";
    case BINGO_ERR_UNKNOWN_VERTEX: return "unknown vertex";
    case BINGO_ERR_PARSE: return "parse error";
    case BINGO_ERR_IO: return "i/o error";
    case BINGO_ERR_INFEASIBLE: return "workload infeasible";
    case BINGO_ERR_BIN_TOO_SMALL: return "bin too small";
    case BINGO_ERR_OUT_OF_MEMORY: return "out of memory";
    case BINGO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bingo_last_error(void) { return last_error.c_str(); }

void bingo_set_threads(int n) { omp_set_num_threads(n > 0 ? n : omp_get_num_procs()); }

int bingo_max_threads(void) { return omp_get_max_threads(); }

// ---- edge lists ------------------------------------------------------------

bingo_status bingo_edges_load(const char* path, bingo_edges** out) {
  BINGO_REQUIRE(path && out, "null argument");
  return guarded([&] { *out = new bingo_edges{bingo::read_edge_list_file(path)}; });
}

bingo_status bingo_edges_save(const bingo_edges* edges, const char* path) {
  BINGO_REQUIRE(edges && path, "null argument");
  return guarded([&] {
    write_file(path, [&](std::ostream& o) { bingo::write_edge_list(o, edges->edges); });
  });
}

bingo_status bingo_edges_from_arrays(const uint32_t* src, const uint32_t* dst, const double* bias,
                                     size_t count, bingo_edges** out) {
  BINGO_REQUIRE(out && (count == 0 || (src && dst)), "null argument");
  return guarded([&] {
    auto* e = new bingo_edges;
    e->edges.reserve(count);
    for (size_t i = 0; i < count; ++i) e->edges.push_back({src[i], dst[i], bias ? bias[i] : 1.0});
    *out = e;
  });
}

bingo_status bingo_edges_generate_powerlaw(size_t vertices, size_t edges, double gamma,
                                           uint64_t seed, bingo_edges** out) {
  BINGO_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = new bingo_edges{bingo::generate_powerlaw_graph(vertices, edges, gamma, seed)};
  });
}

size_t bingo_edges_count(const bingo_edges* edges) { return edges ? edges->edges.size() : 0; }

bingo_status bingo_edges_get(const bingo_edges* edges, size_t index, uint32_t* src, uint32_t* dst,
                             double* bias) {
  BINGO_REQUIRE(edges, "null argument");
  BINGO_REQUIRE(index < edges->edges.size(), "edge index out of range");
  const bingo::Edge& e = edges->edges[index];
  if (src) *src = e.src;
  if (dst) *dst = e.dst;
  if (bias) *bias = e.bias;
  return BINGO_OK;
}

void bingo_edges_destroy(bingo_edges* edges) { delete edges; }

bingo_status bingo_edges_assign_biases(bingo_edges* edges, bingo_bias_distribution dist,
                                       uint64_t uniform_max, double exponential_rate,
                                       uint64_t seed) {
  BINGO_REQUIRE(edges, "null argument");
  return guarded([&] {
    std::vector<double> biases;
    switch (dist) {
      case BINGO_BIAS_DEGREE:
        biases = bingo::degree_biases(edges->edges);
        break;
      case BINGO_BIAS_UNIFORM:
      case BINGO_BIAS_EXPONENTIAL: {
        bingo::BiasParams params;
        params.uniform_max = uniform_max;
        params.exponential_rate = exponential_rate;
        biases = bingo::generate_biases(edges->edges.size(),
                                        dist == BINGO_BIAS_UNIFORM
                                            ? bingo::BiasDistribution::kUniform
                                            : bingo::BiasDistribution::kExponential,
                                        params, seed);
        break;
      }
      default:
        throw bingo::Error(bingo::ErrorCode::kInvalidArgument, "unknown bias distribution");
    }
    bingo::assign_biases(edges->edges, biases);
  });
}

// ---- graphs -----------------------------------------------------------------

void bingo_graph_options_init(bingo_graph_options* options) {
  if (!options) return;
  options->directed = 0;
  options->float_bias = 0;
  options->adaptive = 1;
  options->alpha = 40.0;
  options->beta = 10.0;
}

bingo_status bingo_graph_create(const bingo_graph_options* options, bingo_graph** out) {
  BINGO_REQUIRE(out, "null argument");
  return guarded([&] { *out = new bingo_graph{bingo::DynGraph(to_options(options))}; });
}

bingo_status bingo_graph_from_edges(const bingo_edges* edges, const bingo_graph_options* options,
                                    bingo_graph** out) {
  BINGO_REQUIRE(edges && out, "null argument");
  return guarded([&] {
    *out = new bingo_graph{bingo::DynGraph::from_edges(edges->edges, to_options(options))};
  });
}

bingo_status bingo_graph_load(const char* path, const bingo_graph_options* options,
                              bingo_graph** out) {
  BINGO_REQUIRE(path && out, "null argument");
  return guarded([&] {
    const std::vector<bingo::Edge> edges = bingo::read_edge_list_file(path);
    *out = new bingo_graph{bingo::DynGraph::from_edges(edges, to_options(options))};
  });
}

bingo_status bingo_graph_save(const bingo_graph* graph, const char* path) {
  BINGO_REQUIRE(graph && path, "null argument");
  return guarded([&] {
    const std::vector<bingo::Edge> edges = graph->graph.live_edges();
    write_file(path, [&](std::ostream& o) { bingo::write_edge_list(o, edges); });
  });
}

void bingo_graph_destroy(bingo_graph* graph) { delete graph; }

bingo_status bingo_graph_insert_edge(bingo_graph* graph, uint32_t src, uint32_t dst, double bias,
                                     uint64_t* seq_out) {
  BINGO_REQUIRE(graph, "null argument");
  return guarded([&] {
    const std::uint64_t seq = graph->graph.insert_edge(src, dst, bias);
    if (seq_out) *seq_out = seq;
  });
}

bingo_status bingo_graph_delete_edge(bingo_graph* graph, uint32_t src, uint32_t dst) {
  BINGO_REQUIRE(graph, "null argument");
  return guarded([&] { graph->graph.delete_edge(src, dst); });
}

bingo_status bingo_graph_update_bias(bingo_graph* graph, uint32_t src, uint32_t dst, double bias) {
  BINGO_REQUIRE(graph, "null argument");
  return guarded([&] { graph->graph.update_bias(src, dst, bias); });
}

size_t bingo_graph_vertex_count(const bingo_graph* graph) {
  return graph ? graph->graph.vertex_count() : 0;
}

size_t bingo_graph_entry_count(const bingo_graph* graph) {
  return graph ? graph->graph.entry_count() : 0;
}

bingo_status bingo_graph_degree(const bingo_graph* graph, uint32_t u, uint32_t* out) {
  BINGO_REQUIRE(graph && out, "null argument");
  return guarded([&] { *out = graph->graph.sampler(u).degree(); });
}

bingo_status bingo_graph_neighbor(const bingo_graph* graph, uint32_t u, uint32_t index,
                                  uint32_t* id, double* bias) {
  BINGO_REQUIRE(graph, "null argument");
  return guarded([&] {
    const bingo::NeighborView nb = graph->graph.neighbors(u);
    if (index >= nb.degree()) {
      throw bingo::Error(bingo::ErrorCode::kInvalidArgument, "neighbor index out of range");
    }
    if (id) *id = nb.id(index);
    if (bias) *bias = nb.bias(index);
  });
}

int bingo_graph_has_edge(const bingo_graph* graph, uint32_t u, uint32_t v) {
  return graph && graph->graph.has_edge(u, v) ? 1 : 0;
}

bingo_status bingo_graph_exact_distribution(const bingo_graph* graph, uint32_t u, double* out,
                                            size_t capacity, size_t* length) {
  BINGO_REQUIRE(graph, "null argument");
  return guarded([&] {
    const std::vector<double> p = graph->graph.sampler(u).exact_distribution();
    if (length) *length = p.size();
    if (!out) return;
    if (capacity < p.size()) {
      throw bingo::Error(bingo::ErrorCode::kInvalidArgument, "output buffer too small");
    }
    std::copy(p.begin(), p.end(), out);
  });
}

bingo_status bingo_graph_sample(const bingo_graph* graph, uint32_t u, uint64_t seed, size_t count,
                                uint32_t* out) {
  BINGO_REQUIRE(graph && (count == 0 || out), "null argument");
  return guarded([&] {
    const bingo::VertexSampler& s = graph->graph.sampler(u);
    bingo::Rng rng(seed);
    for (size_t i = 0; i < count; ++i) out[i] = s.sample(rng);
  });
}

size_t bingo_graph_memory_slots(const bingo_graph* graph) {
  return graph ? graph->graph.memory_slots() : 0;
}

void bingo_graph_group_kind_counts(const bingo_graph* graph, size_t counts[5]) {
  if (!counts) return;
  for (int k = 0; k < 5; ++k) counts[k] = 0;
  if (!graph) return;
  const auto c = graph->graph.group_kind_counts();
  for (int k = 0; k < 5; ++k) counts[k] = c[k];
}

// ---- update streams -----------------------------------------------------------

bingo_status bingo_updates_generate(const bingo_edges* edges, size_t batchsize,
                                    bingo_stream_mode mode, uint64_t seed, bingo_edges** initial,
                                    bingo_updates** stream) {
  BINGO_REQUIRE(edges && initial && stream, "null argument");
  BINGO_REQUIRE(mode >= BINGO_STREAM_INSERTION && mode <= BINGO_STREAM_MIXED, "unknown mode");
  return guarded([&] {
    const bingo::StreamMode m = mode == BINGO_STREAM_INSERTION  ? bingo::StreamMode::kInsertion
                                : mode == BINGO_STREAM_DELETION ? bingo::StreamMode::kDeletion
                                                                : bingo::StreamMode::kMixed;
    bingo::UpdateWorkload w = bingo::generate_update_stream(edges->edges, batchsize, m, seed);
    auto a = std::make_unique<bingo_edges>(bingo_edges{std::move(w.initial)});
    auto b = std::make_unique<bingo_updates>(bingo_updates{std::move(w.updates)});
    *initial = a.release();
    *stream = b.release();
  });
}

bingo_status bingo_updates_load(const char* path, bingo_updates** out) {
  BINGO_REQUIRE(path && out, "null argument");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) throw bingo::Error(bingo::ErrorCode::kIo, std::string("cannot open ") + path);
    *out = new bingo_updates{bingo::read_update_stream(in)};
  });
}

bingo_status bingo_updates_save(const bingo_updates* updates, const char* path) {
  BINGO_REQUIRE(updates && path, "null argument");
  return guarded([&] {
    write_file(path, [&](std::ostream& o) { bingo::write_update_stream(o, updates->updates); });
  });
}

size_t bingo_updates_count(const bingo_updates* updates) {
  return updates ? updates->updates.size() : 0;
}

void bingo_updates_destroy(bingo_updates* updates) { delete updates; }

bingo_status bingo_graph_apply_updates(bingo_graph* graph, const bingo_updates* updates,
                                       size_t offset, size_t count, bingo_update_mode mode,
                                       bingo_batch_stats* stats) {
  BINGO_REQUIRE(graph && updates, "null argument");
  BINGO_REQUIRE(offset <= updates->updates.size() && count <= updates->updates.size() - offset,
                "update range out of bounds");
  BINGO_REQUIRE(mode == BINGO_UPDATE_STREAMING || mode == BINGO_UPDATE_BATCHED, "unknown mode");
  return guarded([&] {
    const std::span<const bingo::EdgeUpdate> slice(updates->updates.data() + offset, count);
    const bingo::BatchStats s = mode == BINGO_UPDATE_BATCHED
                                    ? bingo::apply_batch(graph->graph, slice)
                                    : bingo::apply_streaming(graph->graph, slice);
    if (stats) fill_stats(s, stats);
  });
}

// ---- walks --------------------------------------------------------------------

void bingo_walk_config_init(bingo_walk_config* config) {
  if (!config) return;
  const bingo::WalkConfig d;
  config->app = BINGO_WALK_DEEPWALK;
  config->length = d.walk_length;
  config->p = d.p;
  config->q = d.q;
  config->termination_prob = d.termination_prob;
  config->walkers_per_vertex = d.walkers_per_vertex;
  config->seed = d.seed;
  config->keep_walks = 1;
}

bingo_status bingo_graph_walk(const bingo_graph* graph, const bingo_walk_config* config,
                              const uint32_t* starts, size_t start_count, bingo_walks** out) {
  BINGO_REQUIRE(graph && config && out, "null argument");
  return guarded([&] {
    const bingo::DynGraph& g = graph->graph;
    std::vector<bingo::VertexId> chosen =
        starts ? std::vector<bingo::VertexId>(starts, starts + start_count)
               : bingo::default_starts(g, config->walkers_per_vertex);
    auto w = std::make_unique<bingo_walks>();
    switch (config->app) {
      case BINGO_WALK_DEEPWALK:
        w->walks = bingo::deepwalk_walks(g, chosen, config->length, config->seed);
        break;
      case BINGO_WALK_NODE2VEC:
        w->walks = bingo::node2vec_walks(g, chosen, config->length, config->p, config->q,
                                         config->seed);
        break;
      case BINGO_WALK_PPR: {
        bingo::PprResult r = bingo::ppr_walks(g, chosen, config->termination_prob, config->seed,
                                              config->keep_walks != 0);
        w->walks = std::move(r.walks);
        w->visits = std::move(r.visits);
        for (std::uint32_t s : r.steps) w->total_steps += s;
        break;
      }
      default:
        throw bingo::Error(bingo::ErrorCode::kInvalidArgument, "unknown walk application");
    }
    if (config->app != BINGO_WALK_PPR) {
      for (const bingo::Walk& walk : w->walks) w->total_steps += walk.steps();
    }
    *out = w.release();
  });
}

size_t bingo_walks_count(const bingo_walks* walks) { return walks ? walks->walks.size() : 0; }

const uint32_t* bingo_walks_get(const bingo_walks* walks, size_t index, size_t* length) {
  if (!walks || index >= walks->walks.size()) {
    if (length) *length = 0;
    return nullptr;
  }
  const bingo::Walk& w = walks->walks[index];
  if (length) *length = w.vertices.size();
  return w.vertices.data();
}

uint64_t bingo_walks_total_steps(const bingo_walks* walks) {
  return walks ? walks->total_steps : 0;
}

const uint64_t* bingo_walks_visits(const bingo_walks* walks, size_t* length) {
  if (!walks || walks->visits.empty()) {
    if (length) *length = 0;
    return nullptr;
  }
  if (length) *length = walks->visits.size();
  return walks->visits.data();
}

bingo_status bingo_walks_save(const bingo_walks* walks, const char* path) {
  BINGO_REQUIRE(walks && path, "null argument");
  return guarded([&] {
    write_file(path, [&](std::ostream& o) { bingo::write_walks(o, walks->walks); });
  });
}

bingo_status bingo_walks_save_visits(const bingo_walks* walks, const char* path) {
  BINGO_REQUIRE(walks && path, "null argument");
  return guarded([&] {
    write_file(path, [&](std::ostream& o) { bingo::write_visits(o, walks->visits); });
  });
}

void bingo_walks_destroy(bingo_walks* walks) { delete walks; }

// ---- verification ---------------------------------------------------------------

bingo_status bingo_graph_scratch_equivalence(const bingo_graph* graph,
                                             bingo_equivalence_report* report) {
  BINGO_REQUIRE(graph && report, "null argument");
  return guarded([&] {
    const bingo::EquivalenceReport r = bingo::scratch_equivalence(graph->graph);
    std::memset(report, 0, sizeof(*report));
    report->vertices_checked = r.vertices_checked;
    report->violations = r.violations.size();
    if (!r.violations.empty()) {
      const bingo::Violation& v = r.violations.front();
      copy_message(report->first_violation, sizeof(report->first_violation),
                   "vertex " + std::to_string(v.vertex) + ": " + v.message);
    }
  });
}

bingo_status bingo_graph_check_sampling(const bingo_graph* graph, uint32_t u, uint64_t samples,
                                        uint64_t seed, bingo_sampling_check* out) {
  BINGO_REQUIRE(graph && out, "null argument");
  return guarded([&] {
    const bingo::SamplingCheck c =
        bingo::check_sampling(graph->graph.sampler(u), samples, seed);
    out->tv = c.tv;
    out->chi_square = c.chi.statistic;
    out->dof = c.chi.dof;
    out->threshold = c.threshold;
    out->attempts = c.attempts;
    out->passed = c.passed ? 1 : 0;
  });
}

}  // extern "C"
