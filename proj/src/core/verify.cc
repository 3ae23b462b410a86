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

#include "core/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "absl/container/flat_hash_map.h"
#include "core/error.h"
#include "core/rng.h"

namespace bingo {

double tv_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kInvalidArgument, "distributions differ in length");
  }
  double sp = 0.0;
  double sq = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sp += p[i];
    sq += q[i];
    l1 += std::abs(p[i] - q[i]);
  }
  if (std::abs(sp - 1.0) > 1e-6 || std::abs(sq - 1.0) > 1e-6) {
    throw Error(ErrorCode::kInvalidArgument, "distribution does not sum to 1");
  }
  return 0.5 * l1;
}

ChiSquare chi_square_gof(std::span<const std::uint64_t> observed,
                         std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "observed and expected differ in length");
  }
  double n = 0.0;
  for (std::uint64_t o : observed) n += static_cast<double>(o);
  ChiSquare result;
  result.dof = observed.size() - 1;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i] * n;
    if (e < 5.0) throw Error(ErrorCode::kBinTooSmall, "bin too small");
    const double diff = static_cast<double>(observed[i]) - e;
    result.statistic += diff * diff / e;
  }
  return result;
}

double chi_square_quantile(double probability, std::size_t dof) {
  if (dof == 0) return 0.0;
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(dof));
  return boost::math::quantile(dist, probability);
}

std::string Violation::category() const {
  for (const char* c : {"conservation", "distribution", "index"}) {
    if (message.rfind(c, 0) == 0) return c;
  }
  return "structure";
}

std::size_t EquivalenceReport::count(const std::string& category) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [&](const Violation& v) { return v.category() == category; }));
}

std::string EquivalenceReport::to_text() const {
  std::ostringstream out;
  for (const Violation& v : violations) out << "vertex " << v.vertex << ": " << v.message << '\n';
  out << "checked " << vertices_checked << " vertices, " << violations.size() << " violations\n";
  return out.str();
}

std::string EquivalenceReport::to_record() const {
  return "checked=" + std::to_string(vertices_checked) +
         " violations=" + std::to_string(violations.size());
}

namespace {

constexpr double kTolerance = 1e-9;

void check_vertex(const DynGraph& g, VertexId u, std::vector<Violation>& out) {
  auto fail = [&](std::string msg) { out.push_back(Violation{u, std::move(msg)}); };
  if (u >= g.vertex_count()) {
    fail("structure: unknown vertex");
    return;
  }
  const VertexSampler& s = g.sampler(u);
  for (std::string& m : s.check_invariants()) fail(std::move(m));

  // Instance lists: exactly the positions holding each id, oldest first.
  const std::uint32_t d = s.degree();
  absl::flat_hash_map<VertexId, std::vector<std::uint32_t>> positions;
  for (std::uint32_t i = 0; i < d; ++i) positions[s.neighbor_id(i)].push_back(i);
  for (auto& [v, expect] : positions) {
    std::sort(expect.begin(), expect.end(), [&](std::uint32_t a, std::uint32_t b) {
      return s.neighbor_seq(a) < s.neighbor_seq(b);
    });
    if (g.instances(u, v) != expect) fail("index: instance list for " + std::to_string(v) + " is wrong");
    if (!g.options().directed && g.instance_count(v, u) != expect.size()) {
      fail("index: undirected halves disagree for " + std::to_string(v));
    }
  }
  if (d == 0) return;
  if (s.alias_stale()) {
    fail("structure: inter-group table is stale");
    return;
  }

  std::vector<Neighbor> live(d);
  double total = 0.0;
  for (std::uint32_t i = 0; i < d; ++i) {
    live[i] = Neighbor{s.neighbor_id(i), s.neighbor_bias(i), s.neighbor_seq(i)};
    total += s.neighbor_bias(i);
  }
  const VertexSampler fresh = VertexSampler::build(live, s.options());
  const std::vector<double> have = s.exact_distribution();
  const std::vector<double> want = fresh.exact_distribution();
  for (std::uint32_t i = 0; i < d; ++i) {
    if (std::abs(have[i] - want[i]) > kTolerance) {
      fail("distribution: neighbor " + std::to_string(i) + " has " + std::to_string(have[i]) +
           ", scratch build has " + std::to_string(want[i]));
      break;
    }
    const double direct = s.neighbor_bias(i) / total;
    if (std::abs(have[i] - direct) > kTolerance) {
      fail("distribution: neighbor " + std::to_string(i) + " has " + std::to_string(have[i]) +
           ", bias ratio is " + std::to_string(direct));
      break;
    }
  }
}

}  // namespace

EquivalenceReport scratch_equivalence(const DynGraph& g, std::span<const VertexId> vertices) {
  EquivalenceReport report;
  report.vertices_checked = vertices.size();
  std::vector<std::vector<Violation>> found(vertices.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(vertices.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < n; ++i) check_vertex(g, vertices[i], found[i]);
  for (auto& f : found) {
    for (Violation& v : f) report.violations.push_back(std::move(v));
  }
  return report;
}

EquivalenceReport scratch_equivalence(const DynGraph& g) {
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId u = 0; u < all.size(); ++u) all[u] = u;
  return scratch_equivalence(g, all);
}

std::vector<double> brute_force_second_order(const DynGraph& g, VertexId prev, VertexId cur,
                                             double p, double q) {
  const NeighborView nb = g.neighbors(cur);
  if (nb.degree() == 0) throw Error(ErrorCode::kEmptyVertex, "empty neighborhood");
  std::vector<double> dist(g.vertex_count(), 0.0);
  double total = 0.0;
  for (std::uint32_t i = 0; i < nb.degree(); ++i) {
    const VertexId v = nb.id(i);
    double f = 1.0 / q;
    if (v == prev) {
      f = 1.0 / p;
    } else if (g.has_edge(prev, v)) {
      f = 1.0;
    }
    dist[v] += f * nb.bias(i);
    total += f * nb.bias(i);
  }
  for (double& x : dist) x /= total;
  return dist;
}

namespace {

SamplingCheck sampling_attempt(const VertexSampler& sampler, std::uint64_t samples,
                               std::uint64_t seed, double quantile) {
  const std::vector<double> expected = sampler.exact_distribution();
  std::vector<std::uint64_t> counts(expected.size(), 0);
  Rng rng(seed);
  for (std::uint64_t t = 0; t < samples; ++t) ++counts[sampler.sample(rng)];

  SamplingCheck check;
  check.seed = seed;
  std::vector<double> empirical(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    empirical[i] = static_cast<double>(counts[i]) / static_cast<double>(samples);
  }
  check.tv = tv_distance(expected, empirical);

  // Pool bins whose expected count is below 5 into one.
  const double n = static_cast<double>(samples);
  std::vector<std::uint64_t> obs;
  std::vector<double> exp;
  std::uint64_t pooled_obs = 0;
  double pooled_exp = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] * n >= 5.0) {
      obs.push_back(counts[i]);
      exp.push_back(expected[i]);
    } else {
      pooled_obs += counts[i];
      pooled_exp += expected[i];
    }
  }
  if (pooled_exp * n >= 5.0) {
    obs.push_back(pooled_obs);
    exp.push_back(pooled_exp);
  } else if (!exp.empty()) {
    obs.back() += pooled_obs;
    exp.back() += pooled_exp;
  }
  if (exp.size() < 2) {
    check.passed = true;
    return check;
  }
  check.chi = chi_square_gof(obs, exp);
  check.threshold = chi_square_quantile(quantile, check.chi.dof);
  check.passed = check.chi.statistic <= check.threshold;
  return check;
}

}  // namespace

SamplingCheck check_sampling(const VertexSampler& sampler, std::uint64_t samples,
                             std::uint64_t seed, double quantile) {
  if (samples == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  SamplingCheck check = sampling_attempt(sampler, samples, seed, quantile);
  check.attempts = 1;
  if (!check.passed) {
    check = sampling_attempt(sampler, samples, splitmix64(seed ^ 0x5eedULL), quantile);
    check.attempts = 2;
  }
  return check;
}

}  // namespace bingo
