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

#include "kcore/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace kcore {

namespace {

std::string edge_str(VertexId u, VertexId v) {
  std::ostringstream os;
  os << '(' << u << ',' << v << ')';
  return os.str();
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError(GraphErrc::self_loop, "self-loop " + edge_str(e.u, e.v));
    g.reserve_vertices(std::size_t(std::max(e.u, e.v)) + 1);
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (VertexId u = 0; u < g.adj_.size(); ++u) {
    auto& a = g.adj_[u];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end())
      throw GraphError(GraphErrc::duplicate_edge, "duplicate edge " + edge_str(u, *dup));
  }
  g.m_ = edges.size();
  return g;
}

VertexId Graph::add_vertex() {
  adj_.emplace_back();
  return static_cast<VertexId>(adj_.size() - 1);
}

void Graph::reserve_vertices(std::size_t n) {
  if (n > adj_.size()) adj_.resize(n);
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw GraphError(GraphErrc::self_loop, "self-loop " + edge_str(u, v));
  reserve_vertices(std::size_t(std::max(u, v)) + 1);
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v)
    throw GraphError(GraphErrc::duplicate_edge, "duplicate edge " + edge_str(u, v));
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) throw GraphError(GraphErrc::missing_edge, "no edge " + edge_str(u, v));
  auto& au = adj_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --m_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  // search the shorter list
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const VertexId x = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), x);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < adj_.size(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

const char* to_string(BatchKind kind) {
  return kind == BatchKind::insert ? "insert" : "delete";
}

const char* to_string(BatchIssueKind kind) {
  switch (kind) {
    case BatchIssueKind::duplicate: return "duplicate";
    case BatchIssueKind::self_loop: return "self-loop";
    case BatchIssueKind::out_of_range: return "vertex out of range";
    case BatchIssueKind::already_present: return "edge already present";
    case BatchIssueKind::absent: return "edge absent";
  }
  return "?";
}

namespace {

std::string describe(const std::vector<BatchIssue>& issues) {
  std::ostringstream os;
  os << "invalid batch: " << issues.size() << " rejected edge(s)";
  const std::size_t shown = std::min<std::size_t>(issues.size(), 5);
  for (std::size_t i = 0; i < shown; ++i)
    os << (i == 0 ? ": " : ", ") << edge_str(issues[i].edge.u, issues[i].edge.v) << ' '
       << to_string(issues[i].kind);
  if (shown < issues.size()) os << ", ...";
  return os.str();
}

}  // namespace

BatchError::BatchError(std::vector<BatchIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

std::size_t max_incidence(std::span<const Edge> edges) {
  std::unordered_map<VertexId, std::size_t> count;
  count.reserve(edges.size() * 2);
  std::size_t best = 0;
  for (const Edge& e : edges) {
    best = std::max(best, ++count[e.u]);
    best = std::max(best, ++count[e.v]);
  }
  return best;
}

ValidatedBatch validate_batch(const Graph& g, BatchKind kind, std::span<const Edge> raw,
                              ValidationMode mode) {
  ValidatedBatch out;
  out.batch.kind = kind;
  std::vector<BatchIssue> errors;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(raw.size() * 2);
  const std::size_t n = g.num_vertices();

  for (const Edge& e : raw) {
    if (e.u == e.v) {
      errors.push_back({e, BatchIssueKind::self_loop});
      continue;
    }
    if (e.u >= n || e.v >= n) {
      errors.push_back({e, BatchIssueKind::out_of_range});
      continue;
    }
    if (!seen.insert(e.key()).second) {
      out.dropped.push_back({e, BatchIssueKind::duplicate});
      continue;
    }
    const bool present = g.has_edge(e.u, e.v);
    if (kind == BatchKind::insert && present) {
      errors.push_back({e, BatchIssueKind::already_present});
      continue;
    }
    if (kind == BatchKind::remove && !present) {
      errors.push_back({e, BatchIssueKind::absent});
      continue;
    }
    out.batch.edges.push_back(e);
  }

  if (!errors.empty()) {
    if (mode == ValidationMode::strict) throw BatchError(std::move(errors));
    out.dropped.insert(out.dropped.end(), errors.begin(), errors.end());
  }
  out.batch.batch_degree = max_incidence(out.batch.edges);
  return out;
}

}  // namespace kcore
