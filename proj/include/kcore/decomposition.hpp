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

#ifndef KCORE_DECOMPOSITION_HPP
#define KCORE_DECOMPOSITION_HPP

#include "kcore/graph.hpp"

namespace kcore {

/// Core numbers of every vertex by min-degree bucket peeling, O(n + m).
/// The result does not depend on tie-breaking among equal-degree vertices.
CoreVector compute_cores(const Graph& g);

/// Largest entry of cores, 0 when empty.
CoreNumber max_core(const CoreVector& cores);

/// Number of vertices per core number; index k holds the count for core k.
std::vector<std::size_t> core_histogram(const CoreVector& cores);

}  // namespace kcore

#endif  // KCORE_DECOMPOSITION_HPP
