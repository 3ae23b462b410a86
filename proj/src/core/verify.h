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

#ifndef BINGO_CORE_VERIFY_H_
#define BINGO_CORE_VERIFY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/dyn_graph.h"
#include "core/radix_sampler.h"

namespace bingo {

// Half the L1 distance. Throws kInvalidArgument on length mismatch or when
// either side does not sum to 1 within 1e-6.
double tv_distance(std::span<const double> p, std::span<const double> q);

struct ChiSquare {
  double statistic = 0.0;
  std::size_t dof = 0;
};

// Pearson goodness of fit against expected probabilities. Throws
// kBinTooSmall when any expected count is below 5.
ChiSquare chi_square_gof(std::span<const std::uint64_t> observed,
                         std::span<const double> expected);

// Upper quantile of the chi-squared distribution, e.g. (0.999, 2) -> 13.8155.
double chi_square_quantile(double probability, std::size_t dof);

struct Violation {
  VertexId vertex = 0;
  std::string message;

  // "conservation", "distribution", "index" or "structure".
  std::string category() const;
};

struct EquivalenceReport {
  std::size_t vertices_checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(const std::string& category) const;
  // One "vertex <u>: <message>" line per violation plus a summary line.
  std::string to_text() const;
  // "checked=<n> violations=<m>"
  std::string to_record() const;
};

// For each vertex: rebuilds a fresh sampler from the live neighbors and
// compares exact distributions (1e-9), checks both against w_i / sum(w),
// runs the structural self-check, and checks the instance lists. Unknown
// vertices are reported.
EquivalenceReport scratch_equivalence(const DynGraph& g, std::span<const VertexId> vertices);
// Every vertex.
EquivalenceReport scratch_equivalence(const DynGraph& g);

// Next-step distribution from `cur` having arrived from `prev`, indexed by
// vertex id (length vertex_count): f(prev, v) * w_v normalized. Throws
// kEmptyVertex when cur has no neighbors.
std::vector<double> brute_force_second_order(const DynGraph& g, VertexId prev, VertexId cur,
                                             double p, double q);

struct SamplingCheck {
  double tv = 0.0;
  ChiSquare chi;
  double threshold = 0.0;
  std::uint64_t seed = 0;  // seed of the attempt reported
  int attempts = 0;
  bool passed = false;
};

// Draws `samples` neighbors and tests them against exact_distribution with a
// chi-squared test at the given quantile. Bins with expected count below 5
// are pooled. A failed first attempt is retried once with a second seed.
SamplingCheck check_sampling(const VertexSampler& sampler, std::uint64_t samples,
                             std::uint64_t seed, double quantile = 0.999);

}  // namespace bingo

#endif  // BINGO_CORE_VERIFY_H_
