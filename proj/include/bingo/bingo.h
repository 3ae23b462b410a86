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

/*
 * bingo: dynamic-graph random walks on a radix-factorized weighted sampler.
 *
 * C interface. Every handle is opaque and owned by the caller once returned;
 * release it with the matching *_destroy function. Functions that can fail
 * return a bingo_status; on failure bingo_last_error() describes the problem
 * for the calling thread until its next failing call.
 *
 * A graph handle follows a reader/writer contract: concurrent read-only calls
 * are safe, any mutation needs exclusive access.
 */
#ifndef BINGO_BINGO_H_
#define BINGO_BINGO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BINGO_BUILDING_LIBRARY)
#define BINGO_API __declspec(dllexport)
#else
#define BINGO_API __declspec(dllimport)
#endif
#else
#define BINGO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bingo_status {
  BINGO_OK = 0,
  BINGO_ERR_INVALID_ARGUMENT = 1,
  BINGO_ERR_INVALID_BIAS = 2,
  BINGO_ERR_ZERO_BIAS = 3,
  BINGO_ERR_DEGENERATE = 4,
  BINGO_ERR_LAMBDA_OVERFLOW = 5,
  BINGO_ERR_EMPTY_VERTEX = 6,
  BINGO_ERR_NO_SUCH_EDGE = 7,
  BINGO_ERR_UNKNOWN_VERTEX = 8,
  BINGO_ERR_PARSE = 9,
  BINGO_ERR_IO = 10,
  BINGO_ERR_INFEASIBLE = 11,
  BINGO_ERR_BIN_TOO_SMALL = 12,
  BINGO_ERR_OUT_OF_MEMORY = 13,
  BINGO_ERR_INTERNAL = 14
} bingo_status;

typedef struct bingo_graph bingo_graph;
typedef struct bingo_edges bingo_edges;
typedef struct bingo_updates bingo_updates;
typedef struct bingo_walks bingo_walks;

BINGO_API const char* bingo_version(void);
BINGO_API const char* bingo_status_name(bingo_status status);
/* Message of the calling thread's most recent failure; "" if none. */
BINGO_API const char* bingo_last_error(void);

/* Caps internal parallelism; n <= 0 restores the hardware default. */
BINGO_API void bingo_set_threads(int n);
BINGO_API int bingo_max_threads(void);

/* ---- edge lists -------------------------------------------------------- */

/* "src dst [bias]" per line, '#' comments. */
BINGO_API bingo_status bingo_edges_load(const char* path, bingo_edges** out);
BINGO_API bingo_status bingo_edges_save(const bingo_edges* edges, const char* path);
/* bias may be NULL for unit biases. */
BINGO_API bingo_status bingo_edges_from_arrays(const uint32_t* src, const uint32_t* dst,
                                               const double* bias, size_t count,
                                               bingo_edges** out);
/* Chung-Lu power-law graph with unit biases. */
BINGO_API bingo_status bingo_edges_generate_powerlaw(size_t vertices, size_t edges, double gamma,
                                                     uint64_t seed, bingo_edges** out);
BINGO_API size_t bingo_edges_count(const bingo_edges* edges);
BINGO_API bingo_status bingo_edges_get(const bingo_edges* edges, size_t index, uint32_t* src,
                                       uint32_t* dst, double* bias);
BINGO_API void bingo_edges_destroy(bingo_edges* edges);

typedef enum bingo_bias_distribution {
  BINGO_BIAS_DEGREE = 0,
  BINGO_BIAS_UNIFORM = 1,
  BINGO_BIAS_EXPONENTIAL = 2
} bingo_bias_distribution;

/* Overwrites every bias. DEGREE sets bias(u, v) to the degree of v; UNIFORM
 * draws integers in [1, uniform_max]; EXPONENTIAL draws round(Exp(rate)) + 1. */
BINGO_API bingo_status bingo_edges_assign_biases(bingo_edges* edges,
                                                 bingo_bias_distribution dist,
                                                 uint64_t uniform_max, double exponential_rate,
                                                 uint64_t seed);

/* ---- graphs ------------------------------------------------------------ */

typedef struct bingo_graph_options {
  int directed;   /* default 0: every edge is stored in both directions */
  int float_bias; /* default 0: biases must be positive integers */
  int adaptive;   /* default 1: dense / one-element / sparse / regular groups */
  double alpha;   /* dense threshold in percent of degree, default 40 */
  double beta;    /* sparse threshold in percent of degree, default 10 */
} bingo_graph_options;

BINGO_API void bingo_graph_options_init(bingo_graph_options* options);

/* options may be NULL for defaults. */
BINGO_API bingo_status bingo_graph_create(const bingo_graph_options* options, bingo_graph** out);
BINGO_API bingo_status bingo_graph_from_edges(const bingo_edges* edges,
                                              const bingo_graph_options* options,
                                              bingo_graph** out);
BINGO_API bingo_status bingo_graph_load(const char* path, const bingo_graph_options* options,
                                        bingo_graph** out);
/* Writes the live edges in sequence order; undirected edges once. */
BINGO_API bingo_status bingo_graph_save(const bingo_graph* graph, const char* path);
BINGO_API void bingo_graph_destroy(bingo_graph* graph);

/* seq_out may be NULL. */
BINGO_API bingo_status bingo_graph_insert_edge(bingo_graph* graph, uint32_t src, uint32_t dst,
                                               double bias, uint64_t* seq_out);
/* Removes the oldest live (src, dst) instance. */
BINGO_API bingo_status bingo_graph_delete_edge(bingo_graph* graph, uint32_t src, uint32_t dst);
BINGO_API bingo_status bingo_graph_update_bias(bingo_graph* graph, uint32_t src, uint32_t dst,
                                               double bias);

BINGO_API size_t bingo_graph_vertex_count(const bingo_graph* graph);
/* Live directed neighbor entries; an undirected edge counts twice. */
BINGO_API size_t bingo_graph_entry_count(const bingo_graph* graph);
BINGO_API bingo_status bingo_graph_degree(const bingo_graph* graph, uint32_t u, uint32_t* out);
BINGO_API bingo_status bingo_graph_neighbor(const bingo_graph* graph, uint32_t u, uint32_t index,
                                            uint32_t* id, double* bias);
BINGO_API int bingo_graph_has_edge(const bingo_graph* graph, uint32_t u, uint32_t v);

/* Per-neighbor-index probabilities. Call with out == NULL to get the length. */
BINGO_API bingo_status bingo_graph_exact_distribution(const bingo_graph* graph, uint32_t u,
                                                      double* out, size_t capacity,
                                                      size_t* length);
/* count draws of neighbor indices from one seeded stream. */
BINGO_API bingo_status bingo_graph_sample(const bingo_graph* graph, uint32_t u, uint64_t seed,
                                          size_t count, uint32_t* out);

BINGO_API size_t bingo_graph_memory_slots(const bingo_graph* graph);

typedef enum bingo_group_kind {
  BINGO_GROUP_DENSE = 0,
  BINGO_GROUP_ONE_ELEMENT = 1,
  BINGO_GROUP_SPARSE = 2,
  BINGO_GROUP_REGULAR = 3,
  BINGO_GROUP_DECIMAL = 4
} bingo_group_kind;

/* counts[kind] = materialized groups of that kind over all vertices. */
BINGO_API void bingo_graph_group_kind_counts(const bingo_graph* graph, size_t counts[5]);

/* ---- update streams ---------------------------------------------------- */

typedef enum bingo_stream_mode {
  BINGO_STREAM_INSERTION = 0,
  BINGO_STREAM_DELETION = 1,
  BINGO_STREAM_MIXED = 2
} bingo_stream_mode;

/* Splits edges into an initial set and a 10 * batchsize event stream. */
BINGO_API bingo_status bingo_updates_generate(const bingo_edges* edges, size_t batchsize,
                                              bingo_stream_mode mode, uint64_t seed,
                                              bingo_edges** initial, bingo_updates** stream);
/* "I src dst bias seq" / "D src dst seq" per line. */
BINGO_API bingo_status bingo_updates_load(const char* path, bingo_updates** out);
BINGO_API bingo_status bingo_updates_save(const bingo_updates* updates, const char* path);
BINGO_API size_t bingo_updates_count(const bingo_updates* updates);
BINGO_API void bingo_updates_destroy(bingo_updates* updates);

typedef enum bingo_update_mode {
  BINGO_UPDATE_STREAMING = 0,
  BINGO_UPDATE_BATCHED = 1
} bingo_update_mode;

typedef struct bingo_batch_stats {
  uint64_t updates;
  uint64_t inserts;
  uint64_t deletes;
  uint64_t errors;
  uint64_t touched_vertices;
  uint64_t rebuilds;
  /* transitions[from][to] over DENSE, ONE_ELEMENT, SPARSE, REGULAR. */
  uint64_t transitions[4][4];
  double seconds;
  /* First per-update failure, "" when errors == 0. */
  char first_error[128];
} bingo_batch_stats;

/* Applies updates [offset, offset + count). Per-update failures are counted
 * in stats, not returned. stats may be NULL. */
BINGO_API bingo_status bingo_graph_apply_updates(bingo_graph* graph,
                                                 const bingo_updates* updates, size_t offset,
                                                 size_t count, bingo_update_mode mode,
                                                 bingo_batch_stats* stats);

/* ---- walks ------------------------------------------------------------- */

typedef enum bingo_walk_app {
  BINGO_WALK_DEEPWALK = 0,
  BINGO_WALK_NODE2VEC = 1,
  BINGO_WALK_PPR = 2
} bingo_walk_app;

typedef struct bingo_walk_config {
  bingo_walk_app app;
  uint32_t length;             /* default 80 (deepwalk, node2vec) */
  double p;                    /* default 0.5 */
  double q;                    /* default 2 */
  double termination_prob;     /* default 1/80 (ppr) */
  uint32_t walkers_per_vertex; /* default 1 */
  uint64_t seed;
  int keep_walks;              /* default 1; ppr may skip storing paths */
} bingo_walk_config;

BINGO_API void bingo_walk_config_init(bingo_walk_config* config);

/* starts == NULL walks from every vertex with a neighbor. */
BINGO_API bingo_status bingo_graph_walk(const bingo_graph* graph, const bingo_walk_config* config,
                                        const uint32_t* starts, size_t start_count,
                                        bingo_walks** out);
BINGO_API size_t bingo_walks_count(const bingo_walks* walks);
/* Vertices of walk i; valid while the handle lives. */
BINGO_API const uint32_t* bingo_walks_get(const bingo_walks* walks, size_t index,
                                          size_t* length);
BINGO_API uint64_t bingo_walks_total_steps(const bingo_walks* walks);
/* Per-vertex visit counts for ppr, else NULL. */
BINGO_API const uint64_t* bingo_walks_visits(const bingo_walks* walks, size_t* length);
BINGO_API bingo_status bingo_walks_save(const bingo_walks* walks, const char* path);
BINGO_API bingo_status bingo_walks_save_visits(const bingo_walks* walks, const char* path);
BINGO_API void bingo_walks_destroy(bingo_walks* walks);

/* ---- verification ------------------------------------------------------ */

typedef struct bingo_equivalence_report {
  size_t vertices_checked;
  size_t violations;
  char first_violation[256];
} bingo_equivalence_report;

/* Rebuilds every vertex from scratch and compares. */
BINGO_API bingo_status bingo_graph_scratch_equivalence(const bingo_graph* graph,
                                                       bingo_equivalence_report* report);

typedef struct bingo_sampling_check {
  double tv;
  double chi_square;
  size_t dof;
  double threshold;
  int attempts;
  int passed;
} bingo_sampling_check;

/* Chi-squared test of `samples` draws at the 0.999 quantile, one retry. */
BINGO_API bingo_status bingo_graph_check_sampling(const bingo_graph* graph, uint32_t u,
                                                  uint64_t samples, uint64_t seed,
                                                  bingo_sampling_check* out);

#ifdef __cplusplus
}
#endif

#endif /* BINGO_BINGO_H_ */
