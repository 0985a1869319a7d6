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

#ifndef KCORE_GRAPH_HPP
#define KCORE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcore {

using VertexId = std::uint32_t;
using CoreNumber = std::uint32_t;

/// Core number per vertex, indexed by VertexId.
using CoreVector = std::vector<CoreNumber>;

/// An unordered vertex pair. Endpoint order is kept as given so that reports
/// can echo the input; use canonical() for set membership.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge canonical() const { return u <= v ? Edge{u, v} : Edge{v, u}; }
  std::uint64_t key() const {
    const Edge c = canonical();
    return (std::uint64_t(c.u) << 32) | c.v;
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphErrc { self_loop, duplicate_edge, missing_edge, vertex_out_of_range };

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Mutable undirected simple graph. Every adjacency list is kept sorted, so
/// membership tests are O(log d) and neighbor scans are contiguous.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Bulk construction in O(m log m). Throws GraphError on self-loops or
  /// repeated pairs.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return m_; }

  /// Appends an isolated vertex and returns its id.
  VertexId add_vertex();
  /// Grows the vertex set to at least n vertices. Never shrinks.
  void reserve_vertices(std::size_t n);

  /// Inserts {u,v}. Grows the vertex set if either id is beyond it.
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;

  std::span<const VertexId> neighbors(VertexId u) const { return adj_[u]; }
  std::size_t degree(VertexId u) const { return adj_[u].size(); }

  /// Every edge once, as (u,v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t m_ = 0;
};

enum class BatchKind { insert, remove };

const char* to_string(BatchKind kind);

/// A validated set of edges to insert or delete. batch_degree is the maximum
/// number of batch edges incident to a single vertex.
struct EdgeBatch {
  BatchKind kind = BatchKind::insert;
  std::vector<Edge> edges;
  std::size_t batch_degree = 0;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
};

enum class BatchIssueKind { duplicate, self_loop, out_of_range, already_present, absent };

const char* to_string(BatchIssueKind kind);

struct BatchIssue {
  Edge edge;
  BatchIssueKind kind;
};

enum class ValidationMode { strict, lenient };

struct ValidatedBatch {
  EdgeBatch batch;
  /// Duplicates always land here; the other issue kinds only in lenient mode.
  std::vector<BatchIssue> dropped;
};

/// Thrown by validate_batch in strict mode. Carries every rejected edge, not
/// only the first.
class BatchError : public std::runtime_error {
 public:
  explicit BatchError(std::vector<BatchIssue> issues);
  const std::vector<BatchIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<BatchIssue> issues_;
};

/// Checks raw edges against g. Duplicate pairs (in either orientation) are
/// dropped and reported. Self-loops, ids outside the graph, inserting an
/// existing edge and deleting an absent edge are errors: strict mode throws
/// BatchError listing all of them, lenient mode drops and reports them.
ValidatedBatch validate_batch(const Graph& g, BatchKind kind, std::span<const Edge> raw,
                              ValidationMode mode = ValidationMode::strict);

/// Maximum number of edges in the list incident to a single vertex.
std::size_t max_incidence(std::span<const Edge> edges);

}  // namespace kcore

#endif  // KCORE_GRAPH_HPP
