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

#ifndef KCORE_TESTS_ORACLE_HPP
#define KCORE_TESTS_ORACLE_HPP

// Deliberately naive reference implementations. Nothing here calls into the
// library's algorithms; only the Graph container is shared.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore::oracle {

/// Repeatedly deletes a minimum-degree vertex; a vertex's core number is the
/// running maximum of the minimum degree at the time it is deleted.
inline CoreVector naive_cores(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<bool> gone(n, false);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  CoreVector core(n, 0);
  std::size_t running = 0;
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = 0;
    std::size_t best_deg = std::numeric_limits<std::size_t>::max();
    for (VertexId v = 0; v < n; ++v)
      if (!gone[v] && deg[v] < best_deg) {
        best = v;
        best_deg = deg[v];
      }
    running = std::max(running, best_deg);
    core[best] = static_cast<CoreNumber>(running);
    gone[best] = true;
    for (VertexId w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  return core;
}

inline std::uint32_t brute_sd(const Graph& g, const CoreVector& cores, VertexId u) {
  std::uint32_t count = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (v != u && g.has_edge(u, v) && cores[v] >= cores[u]) ++count;
  return count;
}

inline std::uint32_t brute_csd(const Graph& g, const CoreVector& cores, VertexId u) {
  std::uint32_t count = 0;
  for (VertexId w = 0; w < g.num_vertices(); ++w) {
    if (w == u || !g.has_edge(u, w)) continue;
    if (cores[w] > cores[u] || (cores[w] == cores[u] && brute_sd(g, cores, w) > cores[u])) ++count;
  }
  return count;
}

/// Vertices whose core number differs between two vectors of equal length.
inline std::vector<VertexId> changed(const CoreVector& a, const CoreVector& b) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < a.size(); ++v)
    if (a[v] != b[v]) out.push_back(v);
  return out;
}

/// Endpoint multiplicity check for a matching, done with a set.
inline bool is_matching(const std::vector<Edge>& edges) {
  std::set<VertexId> seen;
  for (const Edge& e : edges)
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  return true;
}

/// Small random simple graph for property tests.
inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  while (g.num_edges() < m) {
    const auto u = static_cast<VertexId>(rng() % n);
    const auto v = static_cast<VertexId>(rng() % n);
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

}  // namespace kcore::oracle

#endif  // KCORE_TESTS_ORACLE_HPP
