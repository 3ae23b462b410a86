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

// Command-line harness over the bingo C API.
//
// Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include <bingo/bingo.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bingo_status status, const std::string& what) {
  if (status != BINGO_OK) {
    throw Failure(what + ": " + bingo_status_name(status) + " (" + bingo_last_error() + ")");
  }
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using GraphPtr = std::unique_ptr<bingo_graph, Deleter<bingo_graph, bingo_graph_destroy>>;
using EdgesPtr = std::unique_ptr<bingo_edges, Deleter<bingo_edges, bingo_edges_destroy>>;
using UpdatesPtr = std::unique_ptr<bingo_updates, Deleter<bingo_updates, bingo_updates_destroy>>;
using WalksPtr = std::unique_ptr<bingo_walks, Deleter<bingo_walks, bingo_walks_destroy>>;

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

const char* const kKindNames[5] = {"dense", "one_element", "sparse", "regular", "decimal"};

struct GraphFlags {
  bool directed = false;
  bool undirected = false;
  bool float_bias = false;
  bool no_adaptive = false;

  void add_to(CLI::App* cmd) {
    auto* d = cmd->add_flag("--directed", directed, "Store edges in one direction only");
    auto* u = cmd->add_flag("--undirected", undirected, "Store both directions (default)");
    d->excludes(u);
    cmd->add_flag("--float-bias", float_bias, "Accept real-valued biases");
    cmd->add_flag("--no-adaptive", no_adaptive, "Keep every group in the regular layout");
  }

  bingo_graph_options options() const {
    bingo_graph_options o;
    bingo_graph_options_init(&o);
    o.directed = directed ? 1 : 0;
    o.float_bias = float_bias ? 1 : 0;
    o.adaptive = no_adaptive ? 0 : 1;
    return o;
  }
};

GraphPtr load_graph(const std::string& path, const GraphFlags& flags) {
  const bingo_graph_options o = flags.options();
  bingo_graph* g = nullptr;
  check(bingo_graph_load(path.c_str(), &o, &g), "loading " + path);
  return GraphPtr(g);
}

std::string kind_counts_record(const bingo_graph* g) {
  size_t counts[5];
  bingo_graph_group_kind_counts(g, counts);
  std::ostringstream out;
  for (int k = 0; k < 5; ++k) out << (k ? " " : "") << "groups_" << kKindNames[k] << '=' << counts[k];
  return out.str();
}

std::string memory_record(const bingo_graph* g) {
  const size_t slots = bingo_graph_memory_slots(g);
  std::ostringstream out;
  out << "memory_slots=" << slots << " memory_bytes_estimate=" << slots * 4;
  return out.str();
}

std::string transitions_record(const bingo_batch_stats& s) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      out << (first ? "" : " ") << "conv_" << kKindNames[i] << "_to_" << kKindNames[j] << '='
          << s.transitions[i][j];
      first = false;
    }
  }
  return out.str();
}

void emit(std::ostream* metrics, const std::string& record) {
  std::cout << record << '\n';
  if (metrics) *metrics << record << '\n';
}

std::unique_ptr<std::ofstream> open_metrics(const std::string& path) {
  if (path.empty()) return nullptr;
  auto out = std::make_unique<std::ofstream>(path);
  if (!*out) throw Failure("cannot open " + path);
  return out;
}

bingo_stream_mode parse_stream_mode(const std::string& m) {
  if (m == "insertion") return BINGO_STREAM_INSERTION;
  if (m == "deletion") return BINGO_STREAM_DELETION;
  return BINGO_STREAM_MIXED;
}

bingo_walk_app parse_app(const std::string& a) {
  if (a == "node2vec") return BINGO_WALK_NODE2VEC;
  if (a == "ppr") return BINGO_WALK_PPR;
  return BINGO_WALK_DEEPWALK;
}

// ---- subcommands -------------------------------------------------------------

struct LoadArgs {
  std::string edges;
  std::string output;
  GraphFlags flags;
};

void run_load(const LoadArgs& a) {
  const auto t = std::chrono::steady_clock::now();
  GraphPtr g = load_graph(a.edges, a.flags);
  const double secs = seconds_since(t);
  std::cout << "vertices=" << bingo_graph_vertex_count(g.get())
            << " entries=" << bingo_graph_entry_count(g.get()) << ' ' << memory_record(g.get())
            << ' ' << kind_counts_record(g.get()) << " load_seconds=" << secs << '\n';
  if (!a.output.empty()) check(bingo_graph_save(g.get(), a.output.c_str()), "writing graph");
}

struct GenArgs {
  std::string edges;
  std::size_t batchsize = 0;
  std::string mode = "mixed";
  std::uint64_t seed = 1;
  std::string output;
  std::string initial;
  std::string bias = "keep";
};

void run_gen_updates(const GenArgs& a) {
  bingo_edges* raw = nullptr;
  check(bingo_edges_load(a.edges.c_str(), &raw), "loading " + a.edges);
  EdgesPtr edges(raw);
  if (a.bias != "keep") {
    const bingo_bias_distribution d = a.bias == "degree"    ? BINGO_BIAS_DEGREE
                                      : a.bias == "uniform" ? BINGO_BIAS_UNIFORM
                                                            : BINGO_BIAS_EXPONENTIAL;
    check(bingo_edges_assign_biases(edges.get(), d, 8, 0.5, a.seed), "assigning biases");
  }
  bingo_edges* initial = nullptr;
  bingo_updates* stream = nullptr;
  check(bingo_updates_generate(edges.get(), a.batchsize, parse_stream_mode(a.mode), a.seed,
                               &initial, &stream),
        "generating updates");
  EdgesPtr initial_ptr(initial);
  UpdatesPtr stream_ptr(stream);
  const std::string initial_path = a.initial.empty() ? a.output + ".initial" : a.initial;
  check(bingo_updates_save(stream, a.output.c_str()), "writing " + a.output);
  check(bingo_edges_save(initial, initial_path.c_str()), "writing " + initial_path);
  std::cout << "initial_edges=" << bingo_edges_count(initial)
            << " updates=" << bingo_updates_count(stream) << " mode=" << a.mode
            << " initial=" << initial_path << " stream=" << a.output << '\n';
}

struct UpdateArgs {
  std::string graph;
  std::string stream;
  std::string mode = "batched";
  std::size_t batch = 0;
  std::string output;
  std::string metrics;
  GraphFlags flags;
};

void run_update(const UpdateArgs& a) {
  GraphPtr g = load_graph(a.graph, a.flags);
  bingo_updates* raw = nullptr;
  check(bingo_updates_load(a.stream.c_str(), &raw), "loading " + a.stream);
  UpdatesPtr stream(raw);
  auto metrics = open_metrics(a.metrics);

  const std::size_t total = bingo_updates_count(stream.get());
  const std::size_t chunk = a.batch ? a.batch : std::max<std::size_t>(total, 1);
  const bingo_update_mode mode =
      a.mode == "streaming" ? BINGO_UPDATE_STREAMING : BINGO_UPDATE_BATCHED;
  std::uint64_t errors = 0;
  double seconds = 0.0;
  std::size_t round = 0;
  for (std::size_t offset = 0; offset < total; offset += chunk, ++round) {
    const std::size_t n = std::min(chunk, total - offset);
    bingo_batch_stats s;
    check(bingo_graph_apply_updates(g.get(), stream.get(), offset, n, mode, &s), "applying updates");
    errors += s.errors;
    seconds += s.seconds;
    std::ostringstream rec;
    rec << "chunk=" << round << " updates=" << s.updates << " inserts=" << s.inserts
        << " deletes=" << s.deletes << " errors=" << s.errors
        << " touched_vertices=" << s.touched_vertices << " seconds=" << s.seconds
        << " updates_per_second=" << (s.seconds > 0 ? s.updates / s.seconds : 0.0);
    emit(metrics.get(), rec.str());
    if (s.errors) std::cerr << "chunk " << round << ": " << s.errors << " failed updates, first: " << s.first_error << '\n';
  }
  std::ostringstream summary;
  summary << "summary mode=" << a.mode << " updates=" << total << " errors=" << errors
          << " seconds=" << seconds
          << " updates_per_second=" << (seconds > 0 ? total / seconds : 0.0) << ' '
          << memory_record(g.get());
  emit(metrics.get(), summary.str());
  if (!a.output.empty()) check(bingo_graph_save(g.get(), a.output.c_str()), "writing graph");
}

struct WalkArgs {
  std::string graph;
  std::string app = "deepwalk";
  std::uint32_t length = 80;
  double p = 0.5;
  double q = 2.0;
  double term = 1.0 / 80.0;
  std::uint32_t walkers = 1;
  std::uint64_t seed = 1;
  std::string output;
  std::string visits;
  GraphFlags flags;
};

void run_walk(const WalkArgs& a) {
  GraphPtr g = load_graph(a.graph, a.flags);
  bingo_walk_config cfg;
  bingo_walk_config_init(&cfg);
  cfg.app = parse_app(a.app);
  cfg.length = a.length;
  cfg.p = a.p;
  cfg.q = a.q;
  cfg.termination_prob = a.term;
  cfg.walkers_per_vertex = a.walkers;
  cfg.seed = a.seed;
  const auto t = std::chrono::steady_clock::now();
  bingo_walks* raw = nullptr;
  check(bingo_graph_walk(g.get(), &cfg, nullptr, 0, &raw), "walking");
  WalksPtr walks(raw);
  const double secs = seconds_since(t);
  if (!a.output.empty()) check(bingo_walks_save(raw, a.output.c_str()), "writing walks");
  if (!a.visits.empty()) check(bingo_walks_save_visits(raw, a.visits.c_str()), "writing visits");
  const std::uint64_t steps = bingo_walks_total_steps(raw);
  std::cout << "app=" << a.app << " walks=" << bingo_walks_count(raw) << " steps=" << steps
            << " seconds=" << secs << " steps_per_second=" << (secs > 0 ? steps / secs : 0.0)
            << '\n';
}

struct BenchArgs {
  std::string edges;
  std::size_t batchsize = 100000;
  std::string mode = "mixed";
  std::string update_mode = "batched";
  std::string app = "deepwalk";
  std::size_t rounds = 10;
  std::size_t vertices = 0;
  std::uint32_t length = 80;
  std::uint64_t seed = 1;
  std::string output;
  GraphFlags flags;
};

void run_bench(const BenchArgs& a) {
  if (a.batchsize == 0) throw Failure("--batchsize must be positive");
  EdgesPtr edges;
  bingo_edges* raw = nullptr;
  if (a.edges.empty()) {
    // Synthetic power-law input: twice the stream size so half stays initial.
    const std::size_t n = a.vertices ? a.vertices : std::max<std::size_t>(1000, a.batchsize);
    check(bingo_edges_generate_powerlaw(n, 20 * a.batchsize, 2.1, a.seed, &raw),
          "generating graph");
    edges.reset(raw);
    check(bingo_edges_assign_biases(raw, BINGO_BIAS_DEGREE, 0, 0, a.seed), "assigning biases");
  } else {
    check(bingo_edges_load(a.edges.c_str(), &raw), "loading " + a.edges);
    edges.reset(raw);
  }

  bingo_edges* initial = nullptr;
  bingo_updates* stream = nullptr;
  check(bingo_updates_generate(edges.get(), a.batchsize, parse_stream_mode(a.mode), a.seed,
                               &initial, &stream),
        "generating updates");
  EdgesPtr initial_ptr(initial);
  UpdatesPtr stream_ptr(stream);

  const bingo_graph_options o = a.flags.options();
  bingo_graph* graw = nullptr;
  check(bingo_graph_from_edges(initial, &o, &graw), "building graph");
  GraphPtr g(graw);

  auto metrics = open_metrics(a.output);
  const std::size_t available = bingo_updates_count(stream) / a.batchsize;
  const std::size_t rounds = std::min(a.rounds, available);
  const bingo_update_mode umode =
      a.update_mode == "streaming" ? BINGO_UPDATE_STREAMING : BINGO_UPDATE_BATCHED;

  struct Row {
    double update_seconds;
    double walk_seconds;
    double throughput;
    std::uint64_t steps;
    std::size_t slots;
  };
  std::vector<Row> rows;
  for (std::size_t r = 0; r < rounds; ++r) {
    bingo_batch_stats s;
    check(bingo_graph_apply_updates(g.get(), stream, r * a.batchsize, a.batchsize, umode, &s),
          "applying updates");

    bingo_walk_config cfg;
    bingo_walk_config_init(&cfg);
    cfg.app = parse_app(a.app);
    cfg.length = a.length;
    cfg.seed = a.seed + r;
    cfg.keep_walks = 0;
    const auto t = std::chrono::steady_clock::now();
    bingo_walks* w = nullptr;
    check(bingo_graph_walk(g.get(), &cfg, nullptr, 0, &w), "walking");
    WalksPtr walks(w);
    const double walk_secs = seconds_since(t);

    const Row row{s.seconds, walk_secs, s.seconds > 0 ? s.updates / s.seconds : 0.0,
                  bingo_walks_total_steps(w), bingo_graph_memory_slots(g.get())};
    rows.push_back(row);
    std::ostringstream rec;
    rec << "round=" << r << " updates=" << s.updates << " update_mode=" << a.update_mode
        << " errors=" << s.errors << " update_seconds=" << row.update_seconds
        << " updates_per_second=" << row.throughput << " app=" << a.app
        << " walks=" << bingo_walks_count(w) << " walk_steps=" << row.steps
        << " walk_seconds=" << row.walk_seconds << ' ' << memory_record(g.get()) << ' '
        << kind_counts_record(g.get()) << ' ' << transitions_record(s);
    emit(metrics.get(), rec.str());
  }

  std::printf("\n%-6s %14s %16s %12s %14s\n", "round", "update_s", "updates/s", "walk_s",
              "memory_slots");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::printf("%-6zu %14.4f %16.0f %12.4f %14zu\n", r, rows[r].update_seconds,
                rows[r].throughput, rows[r].walk_seconds, rows[r].slots);
  }
  std::printf("total updates: %zu over %zu rounds\n", rounds * a.batchsize, rounds);
}

struct VerifyArgs {
  std::string graph;
  std::uint64_t samples = 1000000;
  std::size_t vertices = 8;
  std::uint64_t seed = 1;
  GraphFlags flags;
};

bool run_verify(const VerifyArgs& a) {
  GraphPtr g = load_graph(a.graph, a.flags);
  bingo_equivalence_report report;
  check(bingo_graph_scratch_equivalence(g.get(), &report), "scratch equivalence");
  std::cout << "scratch_equivalence checked=" << report.vertices_checked
            << " violations=" << report.violations << '\n';
  if (report.violations) std::cout << "first_violation " << report.first_violation << '\n';
  bool ok = report.violations == 0;

  // Sampling checks on the highest-degree vertices.
  const std::size_t n = bingo_graph_vertex_count(g.get());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> by_degree;
  for (std::uint32_t u = 0; u < n; ++u) {
    std::uint32_t d = 0;
    check(bingo_graph_degree(g.get(), u, &d), "degree");
    if (d > 1) by_degree.emplace_back(d, u);
  }
  std::sort(by_degree.begin(), by_degree.end(),
            [](const auto& x, const auto& y) { return x.first > y.first || (x.first == y.first && x.second < y.second); });
  by_degree.resize(std::min(by_degree.size(), a.vertices));
  for (const auto& [d, u] : by_degree) {
    bingo_sampling_check c;
    check(bingo_graph_check_sampling(g.get(), u, a.samples, a.seed + u, &c), "sampling check");
    std::cout << "sampling vertex=" << u << " degree=" << d << " tv=" << c.tv
              << " chi_square=" << c.chi_square << " dof=" << c.dof
              << " threshold=" << c.threshold << " attempts=" << c.attempts
              << " result=" << (c.passed ? "pass" : "fail") << '\n';
    ok = ok && c.passed;
  }
  std::cout << "verify " << (ok ? "ok" : "failed") << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bingo: dynamic-graph random walks"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Cap on worker threads (default: all cores)");

  const std::vector<std::string> stream_modes{"insertion", "deletion", "mixed"};

  LoadArgs load;
  auto* load_cmd = app.add_subcommand("load", "Build a graph and report its structure");
  load_cmd->add_option("edges", load.edges, "Edge list")->required();
  load_cmd->add_option("-o,--output", load.output, "Write the live edge list here");
  load.flags.add_to(load_cmd);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-updates", "Split an edge list into initial graph and update stream");
  gen_cmd->add_option("edges", gen.edges, "Edge list")->required();
  gen_cmd->add_option("--batchsize", gen.batchsize, "Updates per round (stream is 10x)")->required();
  gen_cmd->add_option("--mode", gen.mode)->check(CLI::IsMember(stream_modes));
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("-o,--output", gen.output, "Stream file")->required();
  gen_cmd->add_option("--initial", gen.initial, "Initial edge list (default <output>.initial)");
  gen_cmd->add_option("--bias", gen.bias, "Re-draw biases first")
      ->check(CLI::IsMember({"keep", "degree", "uniform", "exponential"}));

  UpdateArgs upd;
  auto* upd_cmd = app.add_subcommand("update", "Apply an update stream and report ingestion rate");
  upd_cmd->add_option("graph", upd.graph, "Edge list")->required();
  upd_cmd->add_option("stream", upd.stream, "Update stream")->required();
  upd_cmd->add_option("--mode", upd.mode)->check(CLI::IsMember({"streaming", "batched"}));
  upd_cmd->add_option("--batch", upd.batch, "Updates per chunk (default: whole stream)");
  upd_cmd->add_option("-o,--output", upd.output, "Write the resulting edge list here");
  upd_cmd->add_option("--metrics", upd.metrics, "Metrics file");
  upd.flags.add_to(upd_cmd);

  WalkArgs walk;
  auto* walk_cmd = app.add_subcommand("walk", "Run random walks");
  walk_cmd->add_option("graph", walk.graph, "Edge list")->required();
  walk_cmd->add_option("--app", walk.app)->check(CLI::IsMember({"deepwalk", "node2vec", "ppr"}));
  walk_cmd->add_option("--length", walk.length);
  walk_cmd->add_option("--p", walk.p)->check(CLI::PositiveNumber);
  walk_cmd->add_option("--q", walk.q)->check(CLI::PositiveNumber);
  walk_cmd->add_option("--term", walk.term)->check(CLI::Range(0.0, 1.0));
  walk_cmd->add_option("--walkers", walk.walkers, "Walkers per vertex");
  walk_cmd->add_option("--seed", walk.seed);
  walk_cmd->add_option("-o,--output", walk.output, "Walk file");
  walk_cmd->add_option("--visits", walk.visits, "Visit-count file (ppr)");
  walk.flags.add_to(walk_cmd);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Round-based update plus walk benchmark");
  bench_cmd->add_option("--edges", bench.edges, "Edge list (default: synthetic power-law graph)");
  bench_cmd->add_option("--batchsize", bench.batchsize);
  bench_cmd->add_option("--mode", bench.mode)->check(CLI::IsMember(stream_modes));
  bench_cmd->add_option("--update-mode", bench.update_mode)
      ->check(CLI::IsMember({"streaming", "batched"}));
  bench_cmd->add_option("--app", bench.app)->check(CLI::IsMember({"deepwalk", "node2vec", "ppr"}));
  bench_cmd->add_option("--rounds", bench.rounds);
  bench_cmd->add_option("--vertices", bench.vertices, "Synthetic graph size");
  bench_cmd->add_option("--length", bench.length);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("-o,--output", bench.output, "Metrics file");
  bench.flags.add_to(bench_cmd);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Structural and statistical self-checks");
  ver_cmd->add_option("graph", ver.graph, "Edge list")->required();
  ver_cmd->add_option("--samples", ver.samples);
  ver_cmd->add_option("--vertices", ver.vertices, "Vertices to sample-test");
  ver_cmd->add_option("--seed", ver.seed);
  ver.flags.add_to(ver_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (const char* env = std::getenv("BINGO_SEED")) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "BINGO_SEED must be an unsigned integer\n";
      return 1;
    }
    gen.seed = walk.seed = bench.seed = ver.seed = seed;
  }
  bingo_set_threads(threads);

  try {
    if (*load_cmd) run_load(load);
    if (*gen_cmd) run_gen_updates(gen);
    if (*upd_cmd) run_update(upd);
    if (*walk_cmd) run_walk(walk);
    if (*bench_cmd) run_bench(bench);
    if (*ver_cmd && !run_verify(ver)) return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
