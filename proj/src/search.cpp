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

#include "kcore/search.hpp"

#include <algorithm>

namespace kcore {

VertexId root_of(const Edge& e, const CoreVector& cores) {
  if (cores[e.u] != cores[e.v]) return cores[e.u] < cores[e.v] ? e.u : e.v;
  return std::min(e.u, e.v);
}

CoreNumber root_core(const Edge& e, const CoreVector& cores) {
  return std::min(cores[e.u], cores[e.v]);
}

std::vector<VertexId> SearchScratch::visited_vertices() const {
  std::vector<VertexId> out;
  for (const auto& [v, s] : states_)
    if (s.visited) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t superior_degree(const Graph& g, const CoreVector& cores, VertexId u) {
  std::uint32_t sd = 0;
  for (VertexId v : g.neighbors(u))
    if (cores[v] >= cores[u]) ++sd;
  return sd;
}

std::uint32_t superior_degree(const Graph& g, const CoreVector& cores, VertexId u,
                              SearchScratch& scratch) {
  auto& s = scratch.at(u);
  if (!s.sd_known) {
    s.sd = superior_degree(g, cores, u);
    s.sd_known = true;
  }
  return s.sd;
}

std::uint32_t constraint_superior_degree(const Graph& g, const CoreVector& cores, VertexId u,
                                         SearchScratch& scratch) {
  {
    const auto* s = scratch.find(u);
    if (s && s->csd_known) return s->csd;
  }
  const CoreNumber k = cores[u];
  std::uint32_t csd = 0;
  for (VertexId w : g.neighbors(u)) {
    if (cores[w] > k || (cores[w] == k && superior_degree(g, cores, w, scratch) > k)) ++csd;
  }
  auto& s = scratch.at(u);
  s.csd = csd;
  s.csd_known = true;
  return csd;
}

namespace {

std::vector<VertexId> collect(const SearchScratch& scratch, bool removed) {
  std::vector<VertexId> out;
  for (VertexId v : scratch.visited_vertices())
    if (scratch.removed(v) == removed) out.push_back(v);
  return out;
}

}  // namespace

void insert_remove(SearchScratch& scratch, const Graph& g, const CoreVector& cores, CoreNumber k,
                   VertexId r) {
  const auto threshold = static_cast<std::int64_t>(k);
  auto& stack = scratch.cascade_stack();
  stack.clear();
  stack.push_back(r);
  scratch.at(r).removed = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (cores[w] != k) continue;
      auto& sw = scratch.at(w);
      --sw.cd;
      if (sw.cd == threshold && !sw.removed) {
        stack.push_back(w);
        sw.removed = true;
      }
    }
  }
}

std::vector<VertexId> k_matching_insert(const Graph& g, const CoreVector& cores,
                                        const KGroup& group, SearchScratch& scratch) {
  const CoreNumber k = group.k;
  const auto threshold = static_cast<std::int64_t>(k);
  auto& stack = scratch.dfs_stack();

  for (const Edge& e : group.edges) {
    const VertexId r = root_of(e, cores);
    {
      auto& sr = scratch.at(r);
      if (sr.visited || sr.removed) continue;
    }
    const std::uint32_t csd = constraint_superior_degree(g, cores, r, scratch);
    auto& sr = scratch.at(r);
    // cd may already be negative from removals of r's neighbors during an
    // earlier edge of this group.
    sr.cd += csd;
    scratch.mark_visited(sr);
    stack.clear();
    stack.push_back(r);

    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      if (scratch.at(v).cd > threshold) {
        for (VertexId w : g.neighbors(v)) {
          if (cores[w] != k || scratch.visited(w)) continue;
          if (superior_degree(g, cores, w, scratch) <= k) continue;
          const std::uint32_t csd_w = constraint_superior_degree(g, cores, w, scratch);
          auto& sw = scratch.at(w);
          scratch.mark_visited(sw);
          sw.cd += csd_w;
          stack.push_back(w);
        }
      } else if (!scratch.at(v).removed) {
        insert_remove(scratch, g, cores, k, v);
      }
    }
  }
  return collect(scratch, false);
}

std::vector<VertexId> k_matching_insert(const Graph& g, const CoreVector& cores,
                                        const KGroup& group) {
  SearchScratch scratch;
  return k_matching_insert(g, cores, group, scratch);
}

void delete_remove(SearchScratch& scratch, const Graph& g, const CoreVector& cores, CoreNumber k,
                   VertexId r) {
  const auto threshold = static_cast<std::int64_t>(k);
  auto& stack = scratch.cascade_stack();
  stack.clear();
  stack.push_back(r);
  scratch.at(r).removed = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (cores[w] != k) continue;
      if (!scratch.visited(w)) {
        const std::uint32_t sd = superior_degree(g, cores, w, scratch);
        auto& sw = scratch.at(w);
        scratch.mark_visited(sw);
        sw.cd += sd;
      }
      auto& sw = scratch.at(w);
      --sw.cd;
      if (sw.cd < threshold && !sw.removed) {
        stack.push_back(w);
        sw.removed = true;
      }
    }
  }
}

namespace {

void seed_delete(SearchScratch& scratch, const Graph& g, const CoreVector& cores, CoreNumber k,
                 VertexId x) {
  if (!scratch.visited(x)) {
    const std::uint32_t sd = superior_degree(g, cores, x, scratch);
    auto& sx = scratch.at(x);
    scratch.mark_visited(sx);
    sx.cd = sd;
  }
  const auto& sx = scratch.at(x);
  if (!sx.removed && sx.cd < static_cast<std::int64_t>(k)) delete_remove(scratch, g, cores, k, x);
}

}  // namespace

std::vector<VertexId> k_matching_delete(const Graph& g, const CoreVector& cores,
                                        const KGroup& group, SearchScratch& scratch) {
  for (const Edge& e : group.edges) {
    if (cores[e.u] != cores[e.v]) {
      seed_delete(scratch, g, cores, group.k, root_of(e, cores));
    } else {
      seed_delete(scratch, g, cores, group.k, e.u);
      seed_delete(scratch, g, cores, group.k, e.v);
    }
  }
  return collect(scratch, true);
}

std::vector<VertexId> k_matching_delete(const Graph& g, const CoreVector& cores,
                                        const KGroup& group) {
  SearchScratch scratch;
  return k_matching_delete(g, cores, group, scratch);
}

}  // namespace kcore
