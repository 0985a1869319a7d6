/*
   Copyright 2026 The kcore-maint Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "kcore/workload.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

namespace kcore {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  // reject the top partial block so every residue is equally likely
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

double uniform_unit(Rng& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

const char* to_string(GraphModel model) {
  switch (model) {
    case GraphModel::er: return "er";
    case GraphModel::ba: return "ba";
    case GraphModel::rmat: return "rmat";
  }
  return "?";
}

GraphModel parse_graph_model(std::string_view text) {
  if (text == "er") return GraphModel::er;
  if (text == "ba") return GraphModel::ba;
  if (text == "rmat") return GraphModel::rmat;
  throw std::invalid_argument("unknown graph model '" + std::string(text) + "'");
}

std::size_t target_edges(const GenSpec& spec) {
  return spec.nodes * spec.avg_degree;
}

namespace {

std::uint64_t max_pairs(std::size_t n) {
  return std::uint64_t(n) * (n - 1) / 2;
}

Graph generate_er(const GenSpec& spec, Rng& rng) {
  const std::size_t m = target_edges(spec);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(uniform_below(rng, spec.nodes));
    const auto v = static_cast<VertexId>(uniform_below(rng, spec.nodes));
    if (u == v) continue;
    const Edge e = Edge{u, v}.canonical();
    if (seen.insert(e.key()).second) edges.push_back(e);
  }
  return Graph::from_edges(spec.nodes, edges);
}

Graph generate_ba(const GenSpec& spec, Rng& rng) {
  const std::size_t d = spec.avg_degree;
  const std::size_t seed_size = d + 1;
  std::vector<Edge> edges;
  edges.reserve(spec.nodes * d);
  // every edge contributes both endpoints; sampling from it is degree-biased
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * spec.nodes * d);

  for (VertexId u = 0; u < seed_size; ++u)
    for (VertexId v = u + 1; v < seed_size; ++v) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }

  std::vector<VertexId> picked;
  for (auto v = static_cast<VertexId>(seed_size); v < spec.nodes; ++v) {
    picked.clear();
    while (picked.size() < d) {
      const VertexId t = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
    }
    for (VertexId t : picked) {
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(spec.nodes, edges);
}

Graph generate_rmat(const GenSpec& spec, Rng& rng) {
  constexpr int kRetries = 16;
  const auto& p = spec.rmat_probs;
  int scale = 0;
  while ((std::size_t(1) << scale) < spec.nodes) ++scale;

  const std::size_t m = target_edges(spec);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::vector<Edge> edges;
  edges.reserve(m);

  for (std::size_t i = 0; i < m; ++i) {
    for (int attempt = 0; attempt < kRetries; ++attempt) {
      std::uint64_t u = 0, v = 0;
      for (int level = 0; level < scale; ++level) {
        const double r = uniform_unit(rng);
        u <<= 1;
        v <<= 1;
        if (r < p[0]) {
        } else if (r < p[0] + p[1]) {
          v |= 1;
        } else if (r < p[0] + p[1] + p[2]) {
          u |= 1;
        } else {
          u |= 1;
          v |= 1;
        }
      }
      if (u == v || u >= spec.nodes || v >= spec.nodes) continue;
      const Edge e = Edge{VertexId(u), VertexId(v)}.canonical();
      if (seen.insert(e.key()).second) {
        edges.push_back(e);
        break;
      }
    }
  }
  return Graph::from_edges(spec.nodes, edges);
}

EdgeBatch make_batch(BatchKind kind, std::vector<Edge> edges) {
  EdgeBatch b;
  b.kind = kind;
  b.batch_degree = max_incidence(edges);
  b.edges = std::move(edges);
  return b;
}

// Partial Fisher-Yates: the first `count` entries become a uniform sample.
std::vector<Edge> sample_from(std::vector<Edge> population, std::size_t count, Rng& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, population.size() - i);
    std::swap(population[i], population[j]);
  }
  population.resize(count);
  return population;
}

std::size_t rounded(double fraction, std::size_t population) {
  if (!(fraction >= 0.0) || fraction > 1.0)
    throw WorkloadError("fraction must lie in [0, 1], got " + std::to_string(fraction));
  return static_cast<std::size_t>(std::llround(fraction * double(population)));
}

}  // namespace

Graph generate(const GenSpec& spec) {
  if (spec.nodes < 2) throw WorkloadError("generator needs at least 2 nodes");
  if (spec.avg_degree >= spec.nodes)
    throw WorkloadError("avg degree " + std::to_string(spec.avg_degree) + " is infeasible for " +
                        std::to_string(spec.nodes) + " nodes");
  Rng rng(spec.seed);
  switch (spec.model) {
    case GraphModel::er:
      if (target_edges(spec) > max_pairs(spec.nodes))
        throw WorkloadError("requested edge count exceeds the number of vertex pairs");
      return generate_er(spec, rng);
    case GraphModel::ba: return generate_ba(spec, rng);
    case GraphModel::rmat: {
      double sum = 0;
      for (double q : spec.rmat_probs) {
        if (q < 0) throw WorkloadError("rmat probabilities must be non-negative");
        sum += q;
      }
      if (std::abs(sum - 1.0) > 1e-9) throw WorkloadError("rmat probabilities must sum to 1");
      return generate_rmat(spec, rng);
    }
  }
  throw WorkloadError("unknown graph model");
}

EdgeBatch sample_batch_count(const Graph& g, std::size_t count, BatchKind kind,
                             std::uint64_t seed) {
  Rng rng(seed);
  if (kind == BatchKind::remove) {
    if (count > g.num_edges())
      throw WorkloadError("cannot delete " + std::to_string(count) + " of " +
                          std::to_string(g.num_edges()) + " edges");
    return make_batch(kind, sample_from(g.edges(), count, rng));
  }

  const std::size_t n = g.num_vertices();
  const std::uint64_t absent = n < 2 ? 0 : max_pairs(n) - g.num_edges();
  if (count > absent)
    throw WorkloadError("cannot insert " + std::to_string(count) + " edges, only " +
                        std::to_string(absent) + " absent pairs");

  // dense case: enumerate the complement
  if (absent <= 4 * std::uint64_t(count) + 64) {
    std::vector<Edge> pool;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) pool.push_back({u, v});
    return make_batch(kind, sample_from(std::move(pool), count, rng));
  }

  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(count * 2);
  std::vector<Edge> edges;
  edges.reserve(count);
  while (edges.size() < count) {
    const auto u = static_cast<VertexId>(uniform_below(rng, n));
    const auto v = static_cast<VertexId>(uniform_below(rng, n));
    if (u == v || g.has_edge(u, v)) continue;
    const Edge e = Edge{u, v}.canonical();
    if (chosen.insert(e.key()).second) edges.push_back(e);
  }
  return make_batch(kind, std::move(edges));
}

EdgeBatch sample_batch_random(const Graph& g, double fraction, BatchKind kind, std::uint64_t seed) {
  return sample_batch_count(g, rounded(fraction, g.num_edges()), kind, seed);
}

EdgeBatch sample_batch_by_core(const Graph& g, const std::vector<CoreNumber>& cores, CoreNumber k,
                               double fraction, BatchKind kind, std::uint64_t seed) {
  std::vector<Edge> population;
  for (const Edge& e : g.edges())
    if (std::min(cores[e.u], cores[e.v]) == k) population.push_back(e);
  if (population.empty()) throw WorkloadError("no edges with root core " + std::to_string(k));
  const std::size_t count = rounded(fraction, population.size());
  Rng rng(seed);

  if (kind == BatchKind::remove)
    return make_batch(kind, sample_from(std::move(population), count, rng));

  std::vector<VertexId> at_k, at_least_k;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (cores[v] == k) at_k.push_back(v);
    if (cores[v] >= k) at_least_k.push_back(v);
  }
  std::unordered_set<std::uint64_t> chosen;
  std::vector<Edge> edges;
  const std::size_t max_attempts = 1000 + 200 * count;
  for (std::size_t attempt = 0; edges.size() < count; ++attempt) {
    if (attempt == max_attempts)
      throw WorkloadError("could not find " + std::to_string(count) +
                          " absent pairs with root core " + std::to_string(k));
    const VertexId u = at_k[uniform_below(rng, at_k.size())];
    const VertexId v = at_least_k[uniform_below(rng, at_least_k.size())];
    if (u == v || g.has_edge(u, v)) continue;
    const Edge e = Edge{u, v}.canonical();
    if (chosen.insert(e.key()).second) edges.push_back(e);
  }
  return make_batch(kind, std::move(edges));
}

}  // namespace kcore
