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

#ifndef KCORE_SEQUENTIAL_HPP
#define KCORE_SEQUENTIAL_HPP

#include "kcore/maintenance.hpp"

namespace kcore {

// Single-edge baseline: every batch edge is applied on its own and searched
// with a fresh scratch, the same k-group search the batch engines use with a
// one-edge group. Reports one iteration per edge; always single-threaded.
// This stands in for a dedicated sequential traversal algorithm.

MaintenanceReport sequential_insert_all(Graph& g, CoreVector& cores, const EdgeBatch& batch);
MaintenanceReport sequential_delete_all(Graph& g, CoreVector& cores, const EdgeBatch& batch);

}  // namespace kcore

#endif  // KCORE_SEQUENTIAL_HPP
