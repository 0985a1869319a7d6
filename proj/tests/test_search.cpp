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

#include <doctest.h>

#include <random>

#include "kcore/decomposition.hpp"
#include "kcore/search.hpp"
#include "oracle.hpp"

using namespace kcore;

namespace {

Graph from(std::size_t n, std::initializer_list<Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

// Path p0..p4 (ids 0..4) where every p_i also carries two leaves. Every
// vertex has core 1 and each p_i has superior degree >= 3.
Graph caterpillar() {
  Graph g(15);
  for (VertexId i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, 5 + 2 * i);
    g.add_edge(i, 6 + 2 * i);
  }
  return g;
}

// Draws a matching of absent pairs (insert) or present edges (delete) whose
// root cores all equal some k, and returns it with k.
std::pair<CoreNumber, std::vector<Edge>> random_k_matching(const Graph& g, const CoreVector& cores,
                                                           bool insert, std::size_t want,
                                                           std::mt19937_64& rng) {
  const std::size_t n = g.num_vertices();
  const VertexId seed = static_cast<VertexId>(rng() % n);
  const CoreNumber k = cores[seed];
  std::vector<Edge> out;
  std::vector<bool> used(n, false);
  for (int attempt = 0; attempt < 20000 && out.size() < want; ++attempt) {
    const auto u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
    if (u == v || used[u] || used[v]) continue;
    if (std::min(cores[u], cores[v]) != k) continue;
    if (g.has_edge(u, v) != !insert) continue;
    used[u] = used[v] = true;
    out.push_back({u, v});
  }
  return {k, out};
}

}  // namespace

TEST_CASE("superior degree") {
  const Graph tri = from(3, {{0, 1}, {1, 2}, {0, 2}});
  const CoreVector tri_cores = compute_cores(tri);
  for (VertexId u = 0; u < 3; ++u) CHECK(superior_degree(tri, tri_cores, u) == 2);

  const Graph star = from(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(superior_degree(star, compute_cores(star), 0) == 3);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracle::random_graph(60, 180, seed);
    const CoreVector cores = compute_cores(g);
    SearchScratch scratch;
    for (VertexId u = 0; u < 60; ++u) {
      REQUIRE(superior_degree(g, cores, u) == oracle::brute_sd(g, cores, u));
      REQUIRE(superior_degree(g, cores, u, scratch) == oracle::brute_sd(g, cores, u));
    }
  }
}

TEST_CASE("constraint superior degree") {
  const Graph tri = from(3, {{0, 1}, {1, 2}, {0, 2}});
  const CoreVector tri_cores = compute_cores(tri);
  SearchScratch s1;
  for (VertexId u = 0; u < 3; ++u) CHECK(constraint_superior_degree(tri, tri_cores, u, s1) == 0);

  // K4 minus (0,1) has cores 2; measured after (0,1) is put back every
  // vertex has three core-2 neighbors, each with SD 3 > 2.
  Graph k4 = from(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const CoreVector before = compute_cores(k4);
  CHECK(before == CoreVector{2, 2, 2, 2});
  k4.add_edge(0, 1);
  SearchScratch s2;
  for (VertexId u = 0; u < 4; ++u) {
    CHECK(superior_degree(k4, before, u) == 3);
    CHECK(constraint_superior_degree(k4, before, u, s2) == 3);
  }

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracle::random_graph(50, 130, 100 + seed);
    const CoreVector cores = compute_cores(g);
    // evaluate against a graph with some extra edges, as during maintenance
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 5;) {
      const auto u = static_cast<VertexId>(rng() % 50), v = static_cast<VertexId>(rng() % 50);
      if (u != v && !g.has_edge(u, v)) {
        g.add_edge(u, v);
        ++i;
      }
    }
    SearchScratch scratch;
    for (VertexId u = 0; u < 50; ++u)
      REQUIRE(constraint_superior_degree(g, cores, u, scratch) == oracle::brute_csd(g, cores, u));
  }
}

TEST_CASE("root_of picks the smaller core, then the smaller id") {
  const CoreVector cores{3, 1, 1};
  CHECK(root_of({0, 1}, cores) == 1);
  CHECK(root_of({2, 1}, cores) == 1);
  CHECK(root_core({0, 2}, cores) == 1);
}

TEST_CASE("k_matching_insert: closing a path into a cycle lifts every vertex") {
  Graph g = from(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  const CoreVector cores = compute_cores(g);
  g.add_edge(0, 7);
  const auto lifted = k_matching_insert(g, cores, KGroup{1, {{0, 7}}});
  CHECK(lifted == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("k_matching_insert: a root without enough support is dropped at once") {
  // two triangles joined by a bridge
  Graph g = from(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const CoreVector cores = compute_cores(g);
  g.add_edge(0, 3);
  SearchScratch scratch;
  CHECK(constraint_superior_degree(g, cores, 0, scratch) == 1);
  CHECK(k_matching_insert(g, cores, KGroup{2, {{0, 3}}}, scratch).empty());
  CHECK(scratch.removed(0));
  CHECK(compute_cores(g) == cores);
}

TEST_CASE("insert_remove") {
  SUBCASE("isolated root") {
    const Graph g = from(3, {{1, 2}});
    const CoreVector cores = compute_cores(g);
    SearchScratch s;
    s.mark_visited(s.at(0));
    insert_remove(s, g, cores, 0, 0);
    CHECK(s.removed(0));
    CHECK_FALSE(s.removed(1));
    CHECK_FALSE(s.removed(2));
  }
  SUBCASE("a chain of vertices at cd = k+1 collapses") {
    const Graph g = caterpillar();
    const CoreVector cores = compute_cores(g);
    REQUIRE(cores == CoreVector(15, 1));
    SearchScratch s;
    for (VertexId i = 0; i < 5; ++i) {
      s.mark_visited(s.at(i));
      s.at(i).cd = 2;
    }
    s.at(0).cd = 1;
    insert_remove(s, g, cores, 1, 0);
    for (VertexId i = 0; i < 5; ++i) CHECK(s.removed(i));
    for (VertexId leaf = 5; leaf < 15; ++leaf) CHECK_FALSE(s.removed(leaf));
  }
  SUBCASE("removed vertices are not pushed twice") {
    // snapshot taken before p0-p4 closes the chain into a cycle
    const CoreVector cores = compute_cores(caterpillar());
    Graph g = caterpillar();
    g.add_edge(0, 4);
    SearchScratch s;
    for (VertexId i = 0; i < 5; ++i) {
      s.mark_visited(s.at(i));
      s.at(i).cd = 2;
    }
    s.at(0).cd = 1;
    insert_remove(s, g, cores, 1, 0);
    for (VertexId i = 0; i < 5; ++i) {
      CHECK(s.removed(i));
      // each cycle vertex loses its two cycle neighbors exactly once
      CHECK(s.cd(i) == (i == 0 ? -1 : 0));
    }
  }
}

TEST_CASE("k_matching_delete: cutting a leaf edge drops only the leaf") {
  Graph g = from(4, {{0, 1}, {0, 2}, {0, 3}});
  const CoreVector cores = compute_cores(g);
  g.remove_edge(0, 1);
  CHECK(k_matching_delete(g, cores, KGroup{1, {{0, 1}}}) == std::vector<VertexId>{1});
  const CoreVector after = compute_cores(g);
  CHECK(after == CoreVector{1, 0, 1, 1});
}

TEST_CASE("k_matching_delete: endpoints that keep enough support return nothing") {
  Graph g(6);
  for (VertexId u = 0; u < 5; ++u)
    for (VertexId v = u + 1; v < 5; ++v) g.add_edge(u, v);
  for (VertexId u = 0; u < 4; ++u) g.add_edge(u, 5);
  const CoreVector cores = compute_cores(g);
  REQUIRE(cores == CoreVector(6, 4));
  g.remove_edge(0, 1);
  CHECK(superior_degree(g, cores, 0) >= 4);
  CHECK(k_matching_delete(g, cores, KGroup{4, {{0, 1}}}).empty());
  CHECK(compute_cores(g) == cores);
}

TEST_CASE("delete_remove") {
  SUBCASE("single vertex") {
    const Graph g(2);
    const CoreVector cores{0, 0};
    SearchScratch s;
    delete_remove(s, g, cores, 1, 0);
    CHECK(s.removed(0));
    CHECK_FALSE(s.removed(1));
  }
  SUBCASE("cycle of core-2 vertices unravels after one deletion") {
    Graph g = from(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    const CoreVector cores = compute_cores(g);
    g.remove_edge(7, 0);
    const auto dropped = k_matching_delete(g, cores, KGroup{2, {{0, 7}}});
    CHECK(dropped.size() == 8);
    CHECK(compute_cores(g) == CoreVector(8, 1));
  }
  SUBCASE("re-entry guard") {
    Graph g = from(3, {{0, 1}, {1, 2}, {0, 2}});
    const CoreVector cores = compute_cores(g);
    g.remove_edge(0, 1);
    SearchScratch s;
    s.mark_visited(s.at(0));
    s.at(0).cd = 1;
    delete_remove(s, g, cores, 2, 0);
    for (VertexId v = 0; v < 3; ++v) CHECK(s.removed(v));
    // vertex 2 starts at SD 2 and loses both neighbors once each
    CHECK(s.cd(2) == 0);
  }
}

TEST_CASE("k-group searches match the static oracle and stay on core k") {
  std::mt19937_64 rng(2024);
  int insert_cases = 0, delete_cases = 0;
  while (insert_cases < 20 || delete_cases < 20) {
    const bool insert = insert_cases < 20;
    Graph g = oracle::random_graph(80, 200 + rng() % 120, rng());
    const CoreVector before = compute_cores(g);
    auto [k, edges] = random_k_matching(g, before, insert, 1 + rng() % 4, rng);
    if (edges.empty()) continue;
    for (const Edge& e : edges) insert ? g.add_edge(e.u, e.v) : g.remove_edge(e.u, e.v);

    SearchScratch scratch;
    const KGroup group{k, edges};
    const auto found = insert ? k_matching_insert(g, before, group, scratch)
                              : k_matching_delete(g, before, group, scratch);
    const auto expected = oracle::changed(before, oracle::naive_cores(g));
    REQUIRE(found == expected);
    for (VertexId v : scratch.visited_vertices()) REQUIRE(before[v] == k);
    (insert ? insert_cases : delete_cases)++;
  }
}
