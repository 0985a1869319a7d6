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

#include "batch_driver.hpp"
#include "kcore/maintenance.hpp"

namespace kcore {

MaintenanceReport matching_delete_batch(Graph& g, CoreVector& cores, const EdgeBatch& batch,
                                        const MaintenanceOptions& options) {
  detail::check_preconditions(g, cores, batch, BatchKind::remove);
  return detail::run_batch(
      g, cores, batch, options, -1,
      [](Graph& graph, const Edge& e) { graph.remove_edge(e.u, e.v); },
      [](const Graph& graph, const CoreVector& c, const KGroup& group, SearchScratch& scratch) {
        return k_matching_delete(graph, c, group, scratch);
      });
}

}  // namespace kcore
