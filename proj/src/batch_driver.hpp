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

#ifndef KCORE_BATCH_DRIVER_HPP
#define KCORE_BATCH_DRIVER_HPP

// Iteration loop shared by the insert and delete engines and by the
// single-edge baseline.

#include <chrono>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "kcore/maintenance.hpp"
#include "kcore/search.hpp"

namespace kcore::detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

inline void check_preconditions(const Graph& g, const CoreVector& cores, const EdgeBatch& batch,
                                BatchKind expected) {
  if (batch.kind != expected)
    throw std::invalid_argument(std::string("expected a ") + to_string(expected) + " batch");
  if (cores.size() != g.num_vertices())
    throw std::invalid_argument("core vector size does not match vertex count");
  validate_batch(g, batch.kind, batch.edges, ValidationMode::strict);
}

/// Runs one iteration for `matching`: mutate, search groups in parallel,
/// merge and apply. `search` is k_matching_insert or k_matching_delete and
/// `step` is +1 or -1.
template <typename Mutate, typename Search>
IterationReport run_iteration(Graph& g, CoreVector& cores, std::span<const Edge> matching,
                              unsigned threads, int step, Mutate mutate, Search search,
                              std::unordered_set<VertexId>& touched,
                              const IterationObserver& observer) {
  const auto start = Clock::now();
  IterationReport it;
  it.edges_processed = matching.size();

  for (const Edge& e : matching) mutate(g, e);

  const std::vector<KGroup> groups = group_by_root_core(matching, cores);
  it.groups = groups.size();

  std::vector<std::vector<VertexId>> found(groups.size());
  std::vector<std::size_t> visits(groups.size(), 0);
  const Graph& snapshot = g;
  const CoreVector& core_snapshot = cores;
  const long count = static_cast<long>(groups.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1 && count > 1)
  for (long i = 0; i < count; ++i) {
    SearchScratch scratch;
    found[i] = search(snapshot, core_snapshot, groups[i], scratch);
    visits[i] = scratch.visited_count();
  }

  CoreVector before;
  if (observer) before = cores;

  std::unordered_set<VertexId> merged;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    it.visited_vertices += visits[i];
    for (VertexId v : found[i]) {
      if (!merged.insert(v).second)
        throw std::logic_error("k-group searches returned overlapping vertex sets (vertex " +
                               std::to_string(v) + ")");
    }
  }
  for (VertexId v : merged) {
    cores[v] = static_cast<CoreNumber>(static_cast<int>(cores[v]) + step);
    touched.insert(v);
  }
  it.changed_vertices = merged.size();
  it.seconds = seconds_since(start);

  if (observer) observer(matching, g, before, cores);
  return it;
}

/// Colors the batch and runs every matching as one iteration.
template <typename Mutate, typename Search>
MaintenanceReport run_batch(Graph& g, CoreVector& cores, const EdgeBatch& batch,
                            const MaintenanceOptions& options, int step, Mutate mutate,
                            Search search) {
  const unsigned threads = options.threads == 0 ? 1 : options.threads;
  MaintenanceReport report;
  report.kind = batch.kind;
  report.batch_size = batch.size();
  report.batch_degree = batch.batch_degree;
  report.threads = threads;

  const auto start = Clock::now();
  const MatchingSchedule schedule = color_batch(batch, options.coloring);
  report.coloring_seconds = seconds_since(start);
  report.colors_used = schedule.colors_used;

  std::unordered_set<VertexId> touched;
  for (const auto& matching : schedule.classes) {
    report.per_iteration.push_back(run_iteration(g, cores, matching, threads, step, mutate, search,
                                                 touched, options.observer));
    report.total_visited += report.per_iteration.back().visited_vertices;
  }
  report.iterations = report.per_iteration.size();
  report.total_changed = touched.size();
  report.total_seconds = seconds_since(start);
  return report;
}

}  // namespace kcore::detail

#endif  // KCORE_BATCH_DRIVER_HPP
