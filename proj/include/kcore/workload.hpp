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

#ifndef KCORE_WORKLOAD_HPP
#define KCORE_WORKLOAD_HPP

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

#include "kcore/graph.hpp"

namespace kcore {

/// Every generator and sampler draws from std::mt19937_64 seeded with the
/// caller's 64-bit seed. Bounded integers use rejection on the raw 64-bit
/// output and reals take its top 53 bits, so a seed yields the same
/// workload on any conforming standard library.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
/// Uniform real in [0, 1).
double uniform_unit(Rng& rng);

class WorkloadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphModel { er, ba, rmat };

const char* to_string(GraphModel model);
GraphModel parse_graph_model(std::string_view text);

/// Synthetic graph parameters. avg_degree is the per-vertex edge budget in
/// the SNAP sense: the generators target nodes * avg_degree edges, and a BA
/// vertex attaches avg_degree edges when it arrives.
struct GenSpec {
  GraphModel model = GraphModel::er;
  std::size_t nodes = 0;
  std::size_t avg_degree = 8;
  std::uint64_t seed = 1;
  std::array<double, 4> rmat_probs{0.57, 0.19, 0.19, 0.05};
};

/// Number of edges the generator aims for.
std::size_t target_edges(const GenSpec& spec);

/// Simple graph on spec.nodes vertices, deterministic per seed.
///  - er:   uniform distinct pairs until the target is met.
///  - ba:   a clique on avg_degree + 1 vertices, then each new vertex links
///          to avg_degree distinct existing vertices chosen proportionally
///          to degree. Every vertex ends with core number avg_degree.
///  - rmat: recursive quadrant descent with rmat_probs; self-loops and
///          repeats are redrawn up to a retry cap and then dropped.
/// Throws WorkloadError if nodes < 2, avg_degree >= nodes, or the rmat
/// probabilities do not sum to 1.
Graph generate(const GenSpec& spec);

/// Uniform random batch of round(fraction * m) edges. Delete batches sample
/// existing edges; insert batches sample absent pairs over existing
/// vertices. Throws WorkloadError if the population is too small.
EdgeBatch sample_batch_random(const Graph& g, double fraction, BatchKind kind, std::uint64_t seed);

/// As sample_batch_random with an explicit edge count.
EdgeBatch sample_batch_count(const Graph& g, std::size_t count, BatchKind kind, std::uint64_t seed);

/// Edges whose smaller endpoint core equals k. The population is the set of
/// existing edges with root core k and the batch has round(fraction *
/// population) edges. Delete batches are drawn from that population; insert
/// batches are the same number of absent pairs {u,v} with cores[u] == k and
/// cores[v] >= k. Throws WorkloadError naming k when the population is empty.
EdgeBatch sample_batch_by_core(const Graph& g, const std::vector<CoreNumber>& cores, CoreNumber k,
                               double fraction, BatchKind kind, std::uint64_t seed);

}  // namespace kcore

#endif  // KCORE_WORKLOAD_HPP
