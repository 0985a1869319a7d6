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

#ifndef KCORE_SEARCH_HPP
#define KCORE_SEARCH_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

/// Matching edges whose root endpoint has core number k. The root of an edge
/// is its endpoint with the smaller core, or the smaller id on a tie.
struct KGroup {
  CoreNumber k = 0;
  std::vector<Edge> edges;
};

VertexId root_of(const Edge& e, const CoreVector& cores);
CoreNumber root_core(const Edge& e, const CoreVector& cores);

/// Task-private state of one k-group search. Entries are created on first
/// touch, so memory is proportional to the explored region, not to n.
class SearchScratch {
 public:
  struct State {
    std::int64_t cd = 0;
    std::uint32_t sd = 0;
    std::uint32_t csd = 0;
    bool visited = false;
    bool removed = false;
    bool sd_known = false;
    bool csd_known = false;
  };

  State& at(VertexId v) { return states_[v]; }
  const State* find(VertexId v) const {
    auto it = states_.find(v);
    return it == states_.end() ? nullptr : &it->second;
  }

  bool visited(VertexId v) const {
    auto* s = find(v);
    return s && s->visited;
  }
  bool removed(VertexId v) const {
    auto* s = find(v);
    return s && s->removed;
  }
  std::int64_t cd(VertexId v) const {
    auto* s = find(v);
    return s ? s->cd : 0;
  }

  void mark_visited(State& s) {
    s.visited = true;
    ++visited_count_;
  }
  /// Number of vertices marked visited since construction.
  std::size_t visited_count() const { return visited_count_; }

  /// Visited vertices, ascending.
  std::vector<VertexId> visited_vertices() const;

  std::vector<VertexId>& dfs_stack() { return dfs_stack_; }
  std::vector<VertexId>& cascade_stack() { return cascade_stack_; }

 private:
  std::unordered_map<VertexId, State> states_;
  std::vector<VertexId> dfs_stack_;
  std::vector<VertexId> cascade_stack_;
  std::size_t visited_count_ = 0;
};

/// Neighbors v of u with cores[v] >= cores[u].
std::uint32_t superior_degree(const Graph& g, const CoreVector& cores, VertexId u);
/// Memoized in scratch.
std::uint32_t superior_degree(const Graph& g, const CoreVector& cores, VertexId u,
                              SearchScratch& scratch);

/// Neighbors w of u with cores[w] > cores[u], plus neighbors with
/// cores[w] == cores[u] whose superior degree exceeds cores[u].
/// Superior degrees and the result are memoized in scratch.
std::uint32_t constraint_superior_degree(const Graph& g, const CoreVector& cores, VertexId u,
                                         SearchScratch& scratch);

// Insertion side. g already contains every edge of the current matching and
// cores are the values from before the matching was inserted. Both are
// read-only for the duration of the call.

/// Vertices of core k that join a (k+1)-core because of the group's edges,
/// ascending. Edges are searched one after another and share scratch.
std::vector<VertexId> k_matching_insert(const Graph& g, const CoreVector& cores,
                                        const KGroup& group, SearchScratch& scratch);
std::vector<VertexId> k_matching_insert(const Graph& g, const CoreVector& cores,
                                        const KGroup& group);

/// Marks r removed and propagates the loss of support to core-k neighbors,
/// removing each one whose counter drops to k.
void insert_remove(SearchScratch& scratch, const Graph& g, const CoreVector& cores, CoreNumber k,
                   VertexId r);

// Deletion side. g has the current matching removed already.

/// Vertices of core k that leave every k-core, ascending.
std::vector<VertexId> k_matching_delete(const Graph& g, const CoreVector& cores,
                                        const KGroup& group, SearchScratch& scratch);
std::vector<VertexId> k_matching_delete(const Graph& g, const CoreVector& cores,
                                        const KGroup& group);

/// Marks r removed and cascades: each core-k neighbor gets its counter
/// initialized to its superior degree on first touch and decremented per
/// removed neighbor; it is removed once the counter falls below k.
void delete_remove(SearchScratch& scratch, const Graph& g, const CoreVector& cores, CoreNumber k,
                   VertexId r);

}  // namespace kcore

#endif  // KCORE_SEARCH_HPP
