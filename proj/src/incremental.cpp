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

#include <map>

#include "batch_driver.hpp"
#include "kcore/maintenance.hpp"

namespace kcore {

std::vector<KGroup> group_by_root_core(std::span<const Edge> matching, const CoreVector& cores) {
  std::map<CoreNumber, std::vector<Edge>> by_core;
  for (const Edge& e : matching) by_core[root_core(e, cores)].push_back(e);
  std::vector<KGroup> groups;
  groups.reserve(by_core.size());
  for (auto& [k, edges] : by_core) groups.push_back({k, std::move(edges)});
  return groups;
}

VertexId add_isolated_vertex(Graph& g, CoreVector& cores) {
  const VertexId v = g.add_vertex();
  cores.resize(g.num_vertices(), 0);
  return v;
}

MaintenanceReport matching_insert_batch(Graph& g, CoreVector& cores, const EdgeBatch& batch,
                                        const MaintenanceOptions& options) {
  detail::check_preconditions(g, cores, batch, BatchKind::insert);
  return detail::run_batch(
      g, cores, batch, options, +1, [](Graph& graph, const Edge& e) { graph.add_edge(e.u, e.v); },
      [](const Graph& graph, const CoreVector& c, const KGroup& group, SearchScratch& scratch) {
        return k_matching_insert(graph, c, group, scratch);
      });
}

}  // namespace kcore
