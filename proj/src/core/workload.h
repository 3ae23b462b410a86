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

#ifndef BINGO_CORE_WORKLOAD_H_
#define BINGO_CORE_WORKLOAD_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "core/batch_update.h"
#include "core/dyn_graph.h"

namespace bingo {

enum class StreamMode : std::uint8_t { kInsertion, kDeletion, kMixed };

// Throws kInvalidArgument for anything but insertion|deletion|mixed.
StreamMode parse_stream_mode(const std::string& name);
const char* stream_mode_name(StreamMode mode);

struct UpdateWorkload {
  std::vector<Edge> initial;        // set A
  std::vector<EdgeUpdate> updates;  // 10 * batchsize events, seq 0, 1, 2, ...
};

// Holds back a random 10 * batchsize edges as the insertion pool and replays
// 10 * batchsize events against the rest. Deletions pick a uniform live edge,
// insertions a uniform unused pool edge. Throws kInvalidArgument when
// |edges| <= 10 * batchsize and kInfeasible when a forced op runs dry.
UpdateWorkload generate_update_stream(std::span<const Edge> edges, std::size_t batchsize,
                                      StreamMode mode, std::uint64_t seed);

// "I src dst bias seq" and "D src dst seq", one per line.
void write_update_stream(std::ostream& out, std::span<const EdgeUpdate> updates);
// Throws kParse with the line number.
std::vector<EdgeUpdate> read_update_stream(std::istream& in);

enum class BiasDistribution : std::uint8_t { kDegreePowerLaw, kUniform, kExponential };

BiasDistribution parse_bias_distribution(const std::string& name);

struct BiasParams {
  std::uint64_t uniform_max = 8;  // Uniform over [1, uniform_max]
  double exponential_rate = 0.5;  // round(Exp(rate)) + 1
};

// Integer biases for Uniform and Exponential. Throws kInvalidArgument on
// non-positive parameters; DegreePowerLaw needs the graph, see degree_biases.
std::vector<double> generate_biases(std::size_t count, BiasDistribution dist,
                                    const BiasParams& params, std::uint64_t seed);

// bias(u, v) = degree of v, counting every edge endpoint in the list.
std::vector<double> degree_biases(std::span<const Edge> edges);

// Replaces every edge's bias.
void assign_biases(std::span<Edge> edges, std::span<const double> biases);

// Chung-Lu style graph: endpoints drawn proportionally to (i + 1)^(-1/(gamma-1)),
// self-loops skipped, unit biases.
std::vector<Edge> generate_powerlaw_graph(std::size_t vertices, std::size_t edges, double gamma,
                                          std::uint64_t seed);

}  // namespace bingo

#endif  // BINGO_CORE_WORKLOAD_H_
