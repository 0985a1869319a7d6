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

#include "kcore/sequential.hpp"

#include <unordered_set>

#include "batch_driver.hpp"

namespace kcore {

namespace {

template <typename Mutate, typename Search>
MaintenanceReport run_single_edges(Graph& g, CoreVector& cores, const EdgeBatch& batch, int step,
                                   Mutate mutate, Search search) {
  MaintenanceReport report;
  report.kind = batch.kind;
  report.batch_size = batch.size();
  report.batch_degree = batch.batch_degree;
  report.colors_used = batch.size();
  report.threads = 1;

  const auto start = detail::Clock::now();
  std::unordered_set<VertexId> touched;
  for (const Edge& e : batch.edges) {
    report.per_iteration.push_back(
        detail::run_iteration(g, cores, std::span(&e, 1), 1, step, mutate, search, touched, {}));
    report.total_visited += report.per_iteration.back().visited_vertices;
  }
  report.iterations = report.per_iteration.size();
  report.total_changed = touched.size();
  report.total_seconds = detail::seconds_since(start);
  return report;
}

}  // namespace

MaintenanceReport sequential_insert_all(Graph& g, CoreVector& cores, const EdgeBatch& batch) {
  detail::check_preconditions(g, cores, batch, BatchKind::insert);
  return run_single_edges(
      g, cores, batch, +1, [](Graph& graph, const Edge& e) { graph.add_edge(e.u, e.v); },
      [](const Graph& graph, const CoreVector& c, const KGroup& group, SearchScratch& scratch) {
        return k_matching_insert(graph, c, group, scratch);
      });
}

MaintenanceReport sequential_delete_all(Graph& g, CoreVector& cores, const EdgeBatch& batch) {
  detail::check_preconditions(g, cores, batch, BatchKind::remove);
  return run_single_edges(
      g, cores, batch, -1, [](Graph& graph, const Edge& e) { graph.remove_edge(e.u, e.v); },
      [](const Graph& graph, const CoreVector& c, const KGroup& group, SearchScratch& scratch) {
        return k_matching_delete(graph, c, group, scratch);
      });
}

}  // namespace kcore
