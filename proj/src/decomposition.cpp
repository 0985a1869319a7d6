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

#include "kcore/decomposition.hpp"

#include <algorithm>

namespace kcore {

// Batagelj-Zaversnik: vertices sorted by residual degree in one array, with
// bucket start offsets and per-vertex positions so that decrementing a
// degree is a swap to the front of its bucket.
CoreVector compute_cores(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CoreVector deg(n);
  std::size_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<CoreNumber>(g.degree(v));
    max_deg = std::max<std::size_t>(max_deg, deg[v]);
  }

  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    const std::size_t count = bin[d];
    bin[d] = start;
    start += count;
  }

  std::vector<VertexId> order(n);
  std::vector<std::size_t> pos(n);
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = order[i];
    for (VertexId u : g.neighbors(v)) {
      if (deg[u] <= deg[v]) continue;
      const CoreNumber du = deg[u];
      const std::size_t pu = pos[u];
      const std::size_t pw = bin[du];
      const VertexId w = order[pw];
      if (u != w) {
        order[pu] = w;
        pos[w] = pu;
        order[pw] = u;
        pos[u] = pw;
      }
      ++bin[du];
      --deg[u];
    }
  }
  return deg;
}

CoreNumber max_core(const CoreVector& cores) {
  return cores.empty() ? 0 : *std::max_element(cores.begin(), cores.end());
}

std::vector<std::size_t> core_histogram(const CoreVector& cores) {
  std::vector<std::size_t> hist(cores.empty() ? 0 : max_core(cores) + 1, 0);
  for (CoreNumber c : cores) ++hist[c];
  return hist;
}

}  // namespace kcore
