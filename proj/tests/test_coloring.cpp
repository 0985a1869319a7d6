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
#include <set>

#include "kcore/coloring.hpp"
#include "oracle.hpp"

using namespace kcore;

namespace {

EdgeBatch batch_of(std::vector<Edge> edges) {
  EdgeBatch b;
  b.kind = BatchKind::insert;
  b.batch_degree = max_incidence(edges);
  b.edges = std::move(edges);
  return b;
}

EdgeBatch random_batch(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<Edge> edges;
  while (edges.size() < m) {
    auto u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
    if (u == v) continue;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) continue;
    edges.push_back({u, v});
  }
  return batch_of(std::move(edges));
}

// Independent of verify_schedule: flatten, sort and compare; matching via
// the oracle's set-based check.
bool independent_check(const EdgeBatch& b, const MatchingSchedule& s) {
  std::vector<std::uint64_t> want, got;
  for (const Edge& e : b.edges) want.push_back(e.key());
  for (const auto& cls : s.classes) {
    if (cls.empty() || !oracle::is_matching(cls)) return false;
    for (const Edge& e : cls) got.push_back(e.key());
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  return want == got && s.colors_used == s.classes.size();
}

}  // namespace

TEST_CASE("a matching needs one class") {
  for (auto mode : {ColoringMode::greedy, ColoringMode::delta_plus_one}) {
    const auto s = color_batch(batch_of({{1, 2}, {3, 4}}), mode);
    REQUIRE(s.classes.size() == 1);
    CHECK(s.classes[0] == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(s.colors_used == 1);
  }
}

TEST_CASE("a star needs one class per edge") {
  for (auto mode : {ColoringMode::greedy, ColoringMode::delta_plus_one}) {
    const auto s = color_batch(batch_of({{0, 1}, {0, 2}, {0, 3}}), mode);
    CHECK(s.colors_used == 3);
    for (const auto& cls : s.classes) CHECK(cls.size() == 1);
  }
}

TEST_CASE("a triangle needs three classes") {
  for (auto mode : {ColoringMode::greedy, ColoringMode::delta_plus_one}) {
    const EdgeBatch b = batch_of({{1, 2}, {2, 3}, {1, 3}});
    CHECK(b.batch_degree == 2);
    CHECK(color_batch(b, mode).colors_used == 3);
  }
}

TEST_CASE("empty batch") {
  const auto s = color_batch(batch_of({}), ColoringMode::greedy);
  CHECK(s.classes.empty());
  CHECK(s.colors_used == 0);
}

TEST_CASE("greedy classes are ordered by color and keep input order") {
  // greedy assigns colors 0,1,0,1 along the path
  const EdgeBatch b = batch_of({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto s = color_batch(b, ColoringMode::greedy);
  REQUIRE(s.classes.size() == 2);
  CHECK(s.classes[0] == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(s.classes[1] == std::vector<Edge>{{1, 2}, {3, 4}});
}

TEST_CASE("random batches satisfy partition, matching and color bounds") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const EdgeBatch b = random_batch(500, 1000, seed);
    const std::size_t delta = b.batch_degree;
    const auto greedy = color_batch(b, ColoringMode::greedy);
    const auto vizing = color_batch(b, ColoringMode::delta_plus_one);
    REQUIRE(independent_check(b, greedy));
    REQUIRE(independent_check(b, vizing));
    REQUIRE(verify_schedule(b, greedy));
    REQUIRE(verify_schedule(b, vizing));
    CHECK(greedy.colors_used >= delta);
    CHECK(greedy.colors_used <= 2 * delta - 1);
    CHECK(vizing.colors_used >= delta);
    CHECK(vizing.colors_used <= delta + 1);
  }
}

TEST_CASE("delta+1 on dense and skewed batches") {
  // dense: many edges over few vertices forces long fans and path inversions
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const EdgeBatch b = random_batch(30, 200, 100 + seed);
    const auto s = color_batch(b, ColoringMode::delta_plus_one);
    REQUIRE(independent_check(b, s));
    CHECK(s.colors_used <= b.batch_degree + 1);
  }
  // complete graphs K_n: chromatic index n-1 for even n, n for odd n
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    const EdgeBatch b = batch_of(edges);
    const auto s = color_batch(b, ColoringMode::delta_plus_one);
    REQUIRE(independent_check(b, s));
    CHECK(s.colors_used <= n);
  }
}

TEST_CASE("verify_schedule rejects broken schedules") {
  const EdgeBatch b = batch_of({{0, 1}, {1, 2}, {3, 4}});
  MatchingSchedule good{{{{0, 1}, {3, 4}}, {{1, 2}}}, 2};
  CHECK(verify_schedule(b, good));

  MatchingSchedule shared{{{{0, 1}, {1, 2}}, {{3, 4}}}, 2};
  CHECK_FALSE(verify_schedule(b, shared));

  MatchingSchedule missing{{{{0, 1}, {3, 4}}}, 1};
  CHECK_FALSE(verify_schedule(b, missing));

  MatchingSchedule extra{{{{0, 1}, {3, 4}}, {{1, 2}}, {{5, 6}}}, 3};
  CHECK_FALSE(verify_schedule(b, extra));

  MatchingSchedule twice{{{{0, 1}, {3, 4}}, {{1, 2}, {0, 1}}}, 2};
  CHECK_FALSE(verify_schedule(b, twice));

  MatchingSchedule bad_count{{{{0, 1}, {3, 4}}, {{1, 2}}}, 3};
  CHECK_FALSE(verify_schedule(b, bad_count));
}

TEST_CASE("parse_coloring_mode") {
  CHECK(parse_coloring_mode("greedy") == ColoringMode::greedy);
  CHECK(parse_coloring_mode("delta1") == ColoringMode::delta_plus_one);
  CHECK_THROWS_AS(parse_coloring_mode("vizing"), std::invalid_argument);
}
