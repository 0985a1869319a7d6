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

#ifndef KCORE_BENCH_HPP
#define KCORE_BENCH_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "kcore/coloring.hpp"
#include "kcore/graph.hpp"
#include "kcore/workload.hpp"

namespace kcore {

/// File could not be opened, read, written or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maintained core numbers disagree with a fresh decomposition.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& engine, VertexId vertex, CoreNumber maintained,
                    CoreNumber expected);
  VertexId vertex() const noexcept { return vertex_; }

 private:
  VertexId vertex_;
};

/// An edge list with external labels remapped to dense ids in order of first
/// appearance.
struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;  // dense id -> external label
  std::unordered_map<std::uint64_t, VertexId> ids;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;

  /// Dense id of label, adding an isolated vertex if it is new.
  VertexId intern(std::uint64_t label);
};

/// Whitespace-separated label pairs, one per line. Blank lines and lines
/// starting with '#' are skipped; anything after the second field is
/// ignored. Each unordered pair is stored once; repeats and self-loops are
/// counted and dropped. Throws IoError naming the line on malformed input.
LoadedGraph parse_edgelist(std::istream& in);
LoadedGraph load_edgelist(const std::filesystem::path& path);

/// Pairs of external labels from an update file, same syntax as edge lists.
std::vector<std::pair<std::uint64_t, std::uint64_t>> load_update_pairs(
    const std::filesystem::path& path);

struct WorkloadSpec {
  enum class Kind { percent, count, core, file };
  Kind kind = Kind::percent;
  double percent = 1.0;        // percent:P, P in [0, 100]
  std::size_t count = 0;       // count:N
  CoreNumber core = 0;         // core:K:F
  double fraction = 0.2;       //   F in [0, 1]
  std::filesystem::path file;  // file:PATH
};

/// Parses "percent:P", "count:N", "core:K:F" or "file:PATH".
/// Throws std::invalid_argument.
WorkloadSpec parse_workload(const std::string& text);

enum class Engine { parallel, sequential, both };
const char* to_string(Engine engine);
Engine parse_engine(std::string_view text);

struct ExperimentConfig {
  std::optional<std::filesystem::path> graph_path;
  std::optional<GenSpec> gen;
  WorkloadSpec workload;
  BatchKind mode = BatchKind::insert;
  Engine engine = Engine::parallel;
  unsigned threads = 1;
  ColoringMode coloring = ColoringMode::greedy;
  ValidationMode validation = ValidationMode::strict;
  std::uint64_t seed = 1;
  bool verify = true;
  /// Overrides the dataset column; defaults to the file stem or generator spec.
  std::string dataset;
};

/// Throws std::invalid_argument unless exactly one graph source is set.
void validate_config(const ExperimentConfig& cfg);

struct ReportRow {
  std::string dataset;
  std::size_t n = 0;
  std::size_t m = 0;
  CoreNumber max_core = 0;
  std::string mode;
  std::string engine;
  unsigned threads = 1;
  std::string coloring;
  std::size_t batch_size = 0;
  std::size_t batch_degree = 0;
  std::size_t colors_used = 0;
  std::size_t iterations = 0;
  std::size_t total_changed = 0;
  std::size_t total_visited = 0;
  double coloring_time = 0.0;
  double total_time = 0.0;
  double per_edge_time = 0.0;
  /// sequential time / parallel time, set on both rows of an engine=both run.
  std::optional<double> speedup;
  bool verified = false;
  std::vector<std::size_t> iter_edges;
  std::vector<std::size_t> iter_groups;
  std::vector<std::size_t> iter_changed;
  std::vector<double> iter_time;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Loads or generates the graph, computes initial cores, builds the
/// workload, runs the selected engine(s) on independent copies and, unless
/// cfg.verify is off, checks the result against a fresh decomposition.
/// Only the maintenance call is timed.
std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { csv, json };
ReportFormat parse_report_format(std::string_view text);

/// CSV column order, also the header line.
const std::vector<std::string>& csv_columns();

void write_report(const std::vector<ReportRow>& rows, std::ostream& out, ReportFormat format);
/// Writes to path, or to stdout when path is "-".
void emit_report(const std::vector<ReportRow>& rows, const std::filesystem::path& path,
                 ReportFormat format);
std::vector<ReportRow> parse_report_json(std::istream& in);

}  // namespace kcore

#endif  // KCORE_BENCH_HPP
