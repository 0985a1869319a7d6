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

#ifndef KCORE_MAINTENANCE_HPP
#define KCORE_MAINTENANCE_HPP

#include <functional>
#include <span>
#include <vector>

#include "kcore/coloring.hpp"
#include "kcore/graph.hpp"
#include "kcore/search.hpp"

namespace kcore {

struct IterationReport {
  std::size_t edges_processed = 0;
  /// k-groups searched, i.e. tasks spawned.
  std::size_t groups = 0;
  std::size_t changed_vertices = 0;
  /// Vertex visits across all searches of the iteration.
  std::size_t visited_vertices = 0;
  double seconds = 0.0;
};

struct MaintenanceReport {
  BatchKind kind = BatchKind::insert;
  std::size_t batch_size = 0;
  std::size_t batch_degree = 0;
  std::size_t colors_used = 0;
  std::size_t iterations = 0;
  std::vector<IterationReport> per_iteration;
  /// Distinct vertices whose core number differs after the batch.
  std::size_t total_changed = 0;
  std::size_t total_visited = 0;
  unsigned threads = 1;
  double coloring_seconds = 0.0;
  /// Coloring plus all iterations.
  double total_seconds = 0.0;
};

/// Called after each iteration with the graph after the matching was applied
/// and the core numbers before and after the iteration.
using IterationObserver = std::function<void(std::span<const Edge> matching, const Graph& g,
                                             const CoreVector& before, const CoreVector& after)>;

struct MaintenanceOptions {
  unsigned threads = 1;
  ColoringMode coloring = ColoringMode::greedy;
  IterationObserver observer;
};

/// Inserts the batch one matching at a time. Per matching: add its edges,
/// group them by root core, search every group in parallel against the
/// unchanged core numbers, then raise every returned vertex by one.
///
/// Requires cores to be exact for g and cores.size() == g.num_vertices().
/// Throws BatchError if the batch does not validate against g, and
/// std::logic_error if two groups of one iteration return a common vertex.
MaintenanceReport matching_insert_batch(Graph& g, CoreVector& cores, const EdgeBatch& batch,
                                        const MaintenanceOptions& options = {});

/// Deletion counterpart of matching_insert_batch; returned vertices drop by one.
MaintenanceReport matching_delete_batch(Graph& g, CoreVector& cores, const EdgeBatch& batch,
                                        const MaintenanceOptions& options = {});

/// Adds an isolated vertex with core 0 so a later insert batch can attach it.
VertexId add_isolated_vertex(Graph& g, CoreVector& cores);

/// Groups one matching by root core, ascending k; edges keep matching order.
std::vector<KGroup> group_by_root_core(std::span<const Edge> matching, const CoreVector& cores);

}  // namespace kcore

#endif  // KCORE_MAINTENANCE_HPP
