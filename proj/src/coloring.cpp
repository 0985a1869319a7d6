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

#include "kcore/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace kcore {

const char* to_string(ColoringMode mode) {
  return mode == ColoringMode::greedy ? "greedy" : "delta1";
}

ColoringMode parse_coloring_mode(std::string_view text) {
  if (text == "greedy") return ColoringMode::greedy;
  if (text == "delta1") return ColoringMode::delta_plus_one;
  throw std::invalid_argument("unknown coloring mode '" + std::string(text) + "'");
}

namespace {

using Color = std::uint32_t;
using Local = std::uint32_t;

// Batch edges over dense local ids.
struct LocalBatch {
  std::vector<std::pair<Local, Local>> edges;
  std::size_t vertex_count = 0;
};

LocalBatch localize(const std::vector<Edge>& edges) {
  LocalBatch out;
  std::unordered_map<VertexId, Local> ids;
  ids.reserve(edges.size() * 2);
  auto id_of = [&](VertexId v) {
    auto [it, fresh] = ids.try_emplace(v, static_cast<Local>(ids.size()));
    return it->second;
  };
  out.edges.reserve(edges.size());
  for (const Edge& e : edges) out.edges.emplace_back(id_of(e.u), id_of(e.v));
  out.vertex_count = ids.size();
  return out;
}

std::vector<Color> greedy_colors(const LocalBatch& b) {
  std::vector<std::vector<bool>> used(b.vertex_count);
  std::vector<Color> color(b.edges.size());
  for (std::size_t i = 0; i < b.edges.size(); ++i) {
    auto& uu = used[b.edges[i].first];
    auto& uv = used[b.edges[i].second];
    Color c = 0;
    while ((c < uu.size() && uu[c]) || (c < uv.size() && uv[c])) ++c;
    if (uu.size() <= c) uu.resize(c + 1, false);
    if (uv.size() <= c) uv.resize(c + 1, false);
    uu[c] = uv[c] = true;
    color[i] = c;
  }
  return color;
}

// Misra-Gries edge coloring with colors {0, ..., delta}.
class MisraGries {
 public:
  MisraGries(std::size_t vertex_count, std::size_t delta)
      : at_(vertex_count), palette_(static_cast<Color>(delta + 1)) {}

  void color_edge(Local x, Local f) {
    std::vector<Local> fan = maximal_fan(x, f);
    const Color c = free_color(x);
    const Color d = free_color(fan.back());
    if (c != d) invert_path(x, d, c);

    std::size_t w = 0;
    while (w < fan.size() && !is_free(fan[w], d)) ++w;
    assert(w < fan.size());
    rotate(x, fan, w);
    set(x, fan[w], d);
  }

  Color color_of(Local a, Local b) const { return colors_.at(key(a, b)); }

 private:
  static std::uint64_t key(Local a, Local b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 32) | b;
  }

  bool is_free(Local v, Color c) const { return !at_[v].contains(c); }

  Color free_color(Local v) const {
    for (Color c = 0; c < palette_; ++c)
      if (is_free(v, c)) return c;
    throw std::logic_error("misra-gries: no free color");
  }

  void set(Local a, Local b, Color c) {
    at_[a][c] = b;
    at_[b][c] = a;
    colors_[key(a, b)] = c;
  }

  Color unset(Local a, Local b) {
    auto it = colors_.find(key(a, b));
    const Color c = it->second;
    colors_.erase(it);
    at_[a].erase(c);
    at_[b].erase(c);
    return c;
  }

  // fan[0] = f is the uncolored edge; each next fan vertex y has (x,y)
  // colored with a color free on the previous fan vertex.
  std::vector<Local> maximal_fan(Local x, Local f) const {
    std::vector<Local> fan{f};
    std::unordered_set<Local> in_fan{f};
    bool extended = true;
    while (extended) {
      extended = false;
      for (const auto& [c, y] : at_[x]) {
        if (!in_fan.contains(y) && is_free(fan.back(), c)) {
          fan.push_back(y);
          in_fan.insert(y);
          extended = true;
          break;
        }
      }
    }
    return fan;
  }

  // Swap colors d and c along the maximal d/c alternating path from x.
  // c is free on x, so x is an endpoint of the path.
  void invert_path(Local x, Color d, Color c) {
    std::vector<std::pair<Local, Local>> path;
    std::vector<Color> old;
    Local cur = x;
    Color want = d;
    for (;;) {
      auto it = at_[cur].find(want);
      if (it == at_[cur].end()) break;
      const Local next = it->second;
      path.emplace_back(cur, next);
      old.push_back(want);
      cur = next;
      want = want == d ? c : d;
    }
    for (const auto& [a, b] : path) unset(a, b);
    for (std::size_t i = 0; i < path.size(); ++i)
      set(path[i].first, path[i].second, old[i] == d ? c : d);
  }

  // Shift colors one step down the fan prefix [0, w]: (x,fan[i]) takes the
  // color of (x,fan[i+1]); (x,fan[w]) ends up uncolored.
  void rotate(Local x, const std::vector<Local>& fan, std::size_t w) {
    if (w == 0) return;
    std::vector<Color> shifted(w);
    for (std::size_t i = 1; i <= w; ++i) shifted[i - 1] = unset(x, fan[i]);
    for (std::size_t i = 0; i < w; ++i) set(x, fan[i], shifted[i]);
  }

  std::vector<std::unordered_map<Color, Local>> at_;
  std::unordered_map<std::uint64_t, Color> colors_;
  Color palette_;
};

std::vector<Color> misra_gries_colors(const LocalBatch& b, std::size_t delta) {
  MisraGries mg(b.vertex_count, delta);
  for (const auto& [x, f] : b.edges) mg.color_edge(x, f);
  std::vector<Color> color(b.edges.size());
  for (std::size_t i = 0; i < b.edges.size(); ++i)
    color[i] = mg.color_of(b.edges[i].first, b.edges[i].second);
  return color;
}

}  // namespace

MatchingSchedule color_batch(const EdgeBatch& batch, ColoringMode mode) {
  MatchingSchedule schedule;
  if (batch.edges.empty()) return schedule;

  const LocalBatch local = localize(batch.edges);
  const std::vector<Color> color = mode == ColoringMode::greedy
                                       ? greedy_colors(local)
                                       : misra_gries_colors(local, max_incidence(batch.edges));

  const Color top = *std::max_element(color.begin(), color.end());
  std::vector<std::vector<Edge>> by_color(std::size_t(top) + 1);
  for (std::size_t i = 0; i < batch.edges.size(); ++i) by_color[color[i]].push_back(batch.edges[i]);
  for (auto& cls : by_color)
    if (!cls.empty()) schedule.classes.push_back(std::move(cls));
  schedule.colors_used = schedule.classes.size();
  return schedule;
}

bool verify_schedule(const EdgeBatch& batch, const MatchingSchedule& schedule) {
  if (schedule.colors_used != schedule.classes.size()) return false;

  std::unordered_map<std::uint64_t, std::size_t> remaining;
  for (const Edge& e : batch.edges) ++remaining[e.key()];

  std::size_t total = 0;
  for (const auto& cls : schedule.classes) {
    if (cls.empty()) return false;
    std::unordered_set<VertexId> endpoints;
    for (const Edge& e : cls) {
      if (!endpoints.insert(e.u).second || !endpoints.insert(e.v).second) return false;
      auto it = remaining.find(e.key());
      if (it == remaining.end() || it->second == 0) return false;
      --it->second;
      ++total;
    }
  }
  return total == batch.edges.size();
}

}  // namespace kcore
