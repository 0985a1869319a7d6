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

#include "kcore/bench.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <unordered_set>

#include "kcore/decomposition.hpp"
#include "kcore/maintenance.hpp"
#include "kcore/sequential.hpp"

namespace kcore {

VerificationError::VerificationError(const std::string& engine, VertexId vertex,
                                     CoreNumber maintained, CoreNumber expected)
    : std::runtime_error(engine + " engine diverged at vertex " + std::to_string(vertex) +
                         ": maintained core " + std::to_string(maintained) + ", expected " +
                         std::to_string(expected)),
      vertex_(vertex) {}

VertexId LoadedGraph::intern(std::uint64_t label) {
  auto [it, fresh] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
  if (fresh) {
    labels.push_back(label);
    graph.add_vertex();
  }
  return it->second;
}

namespace {

bool parse_label(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

// Calls fn(a, b) for each data line. Returns false on a blank/comment line.
template <typename Fn>
void for_each_pair(std::istream& in, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream iss(line);
    std::string a, b;
    if (!(iss >> a)) continue;
    if (a[0] == '#') continue;
    std::uint64_t x = 0, y = 0;
    if (!(iss >> b) || !parse_label(a, x) || !parse_label(b, y))
      throw IoError("line " + std::to_string(line_no) + ": expected two integer labels, got '" +
                    line + "'");
    fn(x, y);
  }
  if (in.bad()) throw IoError("read error after line " + std::to_string(line_no));
}

}  // namespace

LoadedGraph parse_edgelist(std::istream& in) {
  LoadedGraph out;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  for_each_pair(in, [&](std::uint64_t a, std::uint64_t b) {
    const VertexId u = out.intern(a);
    const VertexId v = out.intern(b);
    if (u == v) {
      ++out.self_loops;
      return;
    }
    const Edge e = Edge{u, v}.canonical();
    if (!seen.insert(e.key()).second) {
      ++out.duplicates;
      return;
    }
    edges.push_back(e);
  });
  out.graph = Graph::from_edges(out.labels.size(), edges);
  return out;
}

LoadedGraph load_edgelist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_edgelist(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> load_update_pairs(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  try {
    for_each_pair(in, [&](std::uint64_t a, std::uint64_t b) { pairs.emplace_back(a, b); });
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
  return pairs;
}

WorkloadSpec parse_workload(const std::string& text) {
  WorkloadSpec w;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("workload needs KIND:ARGS: " + text);
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  try {
    std::size_t used = 0;
    if (kind == "percent") {
      w.kind = WorkloadSpec::Kind::percent;
      w.percent = std::stod(rest, &used);
      if (used != rest.size() || w.percent < 0 || w.percent > 100) throw std::invalid_argument("");
    } else if (kind == "count") {
      w.kind = WorkloadSpec::Kind::count;
      w.count = std::stoull(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("");
    } else if (kind == "core") {
      w.kind = WorkloadSpec::Kind::core;
      const auto sep = rest.find(':');
      if (sep == std::string::npos) throw std::invalid_argument("");
      const std::string k = rest.substr(0, sep), f = rest.substr(sep + 1);
      w.core = static_cast<CoreNumber>(std::stoul(k, &used));
      if (used != k.size()) throw std::invalid_argument("");
      w.fraction = std::stod(f, &used);
      if (used != f.size() || w.fraction < 0 || w.fraction > 1) throw std::invalid_argument("");
    } else if (kind == "file") {
      w.kind = WorkloadSpec::Kind::file;
      if (rest.empty()) throw std::invalid_argument("");
      w.file = rest;
    } else {
      throw std::invalid_argument("");
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad workload '" + text +
                                "' (expected percent:P, count:N, core:K:F or file:PATH)");
  }
  return w;
}

const char* to_string(Engine engine) {
  switch (engine) {
    case Engine::parallel: return "parallel";
    case Engine::sequential: return "sequential";
    case Engine::both: return "both";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "parallel") return Engine::parallel;
  if (text == "sequential") return Engine::sequential;
  if (text == "both") return Engine::both;
  throw std::invalid_argument("unknown engine '" + std::string(text) + "'");
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.graph_path.has_value() == cfg.gen.has_value())
    throw std::invalid_argument("exactly one of a graph file or a generator must be given");
  if (cfg.threads == 0) throw std::invalid_argument("threads must be positive");
}

namespace {

struct Prepared {
  std::string dataset;
  Graph graph;
  CoreVector cores;
  EdgeBatch batch;
};

std::string default_dataset(const ExperimentConfig& cfg) {
  if (!cfg.dataset.empty()) return cfg.dataset;
  if (cfg.graph_path) return cfg.graph_path->stem().string();
  const GenSpec& g = *cfg.gen;
  std::ostringstream os;
  os << to_string(g.model) << "-n" << g.nodes << "-d" << g.avg_degree << "-s" << g.seed;
  return os.str();
}

Prepared prepare(const ExperimentConfig& cfg) {
  Prepared p;
  p.dataset = default_dataset(cfg);
  LoadedGraph loaded;
  if (cfg.graph_path) {
    loaded = load_edgelist(*cfg.graph_path);
  } else {
    loaded.graph = generate(*cfg.gen);
    loaded.labels.resize(loaded.graph.num_vertices());
    for (VertexId v = 0; v < loaded.labels.size(); ++v) {
      loaded.labels[v] = v;
      loaded.ids.emplace(v, v);
    }
  }

  std::vector<Edge> raw;
  const WorkloadSpec& w = cfg.workload;
  if (w.kind == WorkloadSpec::Kind::file) {
    for (const auto& [a, b] : load_update_pairs(w.file)) {
      // new labels in an insert stream become isolated vertices (core 0)
      // before maintenance starts
      if (cfg.mode == BatchKind::insert) {
        raw.push_back({loaded.intern(a), loaded.intern(b)});
      } else {
        auto ia = loaded.ids.find(a), ib = loaded.ids.find(b);
        if (ia == loaded.ids.end() || ib == loaded.ids.end())
          throw BatchError({{Edge{VertexId(a), VertexId(b)}, BatchIssueKind::absent}});
        raw.push_back({ia->second, ib->second});
      }
    }
  }

  p.graph = std::move(loaded.graph);
  p.cores = compute_cores(p.graph);

  switch (w.kind) {
    case WorkloadSpec::Kind::percent:
      p.batch = sample_batch_random(p.graph, w.percent / 100.0, cfg.mode, cfg.seed);
      break;
    case WorkloadSpec::Kind::count:
      p.batch = sample_batch_count(p.graph, w.count, cfg.mode, cfg.seed);
      break;
    case WorkloadSpec::Kind::core:
      p.batch = sample_batch_by_core(p.graph, p.cores, w.core, w.fraction, cfg.mode, cfg.seed);
      break;
    case WorkloadSpec::Kind::file:
      p.batch = validate_batch(p.graph, cfg.mode, raw, cfg.validation).batch;
      break;
  }
  return p;
}

void verify(const std::string& engine, const Graph& g, const CoreVector& cores) {
  const CoreVector expected = compute_cores(g);
  for (VertexId v = 0; v < expected.size(); ++v)
    if (cores[v] != expected[v]) throw VerificationError(engine, v, cores[v], expected[v]);
}

ReportRow make_row(const Prepared& p, const ExperimentConfig& cfg, const std::string& engine,
                   const MaintenanceReport& r) {
  ReportRow row;
  row.dataset = p.dataset;
  row.n = p.graph.num_vertices();
  row.m = p.graph.num_edges();
  row.max_core = max_core(p.cores);
  row.mode = to_string(cfg.mode);
  row.engine = engine;
  row.threads = r.threads;
  row.coloring = engine == "sequential" ? "none" : to_string(cfg.coloring);
  row.batch_size = r.batch_size;
  row.batch_degree = r.batch_degree;
  row.colors_used = r.colors_used;
  row.iterations = r.iterations;
  row.total_changed = r.total_changed;
  row.total_visited = r.total_visited;
  row.coloring_time = r.coloring_seconds;
  row.total_time = r.total_seconds;
  row.per_edge_time = r.batch_size == 0 ? 0.0 : r.total_seconds / double(r.batch_size);
  for (const auto& it : r.per_iteration) {
    row.iter_edges.push_back(it.edges_processed);
    row.iter_groups.push_back(it.groups);
    row.iter_changed.push_back(it.changed_vertices);
    row.iter_time.push_back(it.seconds);
  }
  return row;
}

ReportRow run_engine(const Prepared& p, const ExperimentConfig& cfg, Engine engine) {
  Graph g = p.graph;
  CoreVector cores = p.cores;
  MaintenanceReport r;
  const bool insert = cfg.mode == BatchKind::insert;
  if (engine == Engine::parallel) {
    MaintenanceOptions opt;
    opt.threads = cfg.threads;
    opt.coloring = cfg.coloring;
    r = insert ? matching_insert_batch(g, cores, p.batch, opt)
               : matching_delete_batch(g, cores, p.batch, opt);
  } else {
    r = insert ? sequential_insert_all(g, cores, p.batch)
               : sequential_delete_all(g, cores, p.batch);
  }
  ReportRow row = make_row(p, cfg, to_string(engine), r);
  if (cfg.verify) {
    verify(row.engine, g, cores);
    row.verified = true;
  }
  return row;
}

}  // namespace

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const Prepared p = prepare(cfg);
  std::vector<ReportRow> rows;
  if (cfg.engine != Engine::sequential) rows.push_back(run_engine(p, cfg, Engine::parallel));
  if (cfg.engine != Engine::parallel) rows.push_back(run_engine(p, cfg, Engine::sequential));
  if (cfg.engine == Engine::both) {
    const double par = rows[0].total_time, seq = rows[1].total_time;
    const double speedup = par > 0 ? seq / par : std::numeric_limits<double>::infinity();
    for (auto& row : rows) row.speedup = speedup;
  }
  return rows;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + std::string(text) + "'");
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{"dataset",
                                             "n",
                                             "m",
                                             "max_core",
                                             "mode",
                                             "engine",
                                             "threads",
                                             "coloring",
                                             "batch_size",
                                             "batch_degree",
                                             "colors_used",
                                             "iterations",
                                             "total_changed",
                                             "total_visited",
                                             "coloring_time_s",
                                             "total_time_s",
                                             "per_edge_time_s",
                                             "speedup",
                                             "verified",
                                             "iter_edges",
                                             "iter_groups",
                                             "iter_changed",
                                             "iter_time_s"};
  return cols;
}

namespace {

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  os << std::setprecision(9);
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ";" : "") << xs[i];
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

using nlohmann::json;

json to_json(const ReportRow& r) {
  return json{{"dataset", r.dataset},
              {"n", r.n},
              {"m", r.m},
              {"max_core", r.max_core},
              {"mode", r.mode},
              {"engine", r.engine},
              {"threads", r.threads},
              {"coloring", r.coloring},
              {"batch_size", r.batch_size},
              {"batch_degree", r.batch_degree},
              {"colors_used", r.colors_used},
              {"iterations", r.iterations},
              {"total_changed", r.total_changed},
              {"total_visited", r.total_visited},
              {"coloring_time_s", r.coloring_time},
              {"total_time_s", r.total_time},
              {"per_edge_time_s", r.per_edge_time},
              {"speedup", r.speedup ? json(*r.speedup) : json(nullptr)},
              {"verified", r.verified},
              {"iter_edges", r.iter_edges},
              {"iter_groups", r.iter_groups},
              {"iter_changed", r.iter_changed},
              {"iter_time_s", r.iter_time}};
}

ReportRow from_json(const json& j) {
  ReportRow r;
  j.at("dataset").get_to(r.dataset);
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  j.at("max_core").get_to(r.max_core);
  j.at("mode").get_to(r.mode);
  j.at("engine").get_to(r.engine);
  j.at("threads").get_to(r.threads);
  j.at("coloring").get_to(r.coloring);
  j.at("batch_size").get_to(r.batch_size);
  j.at("batch_degree").get_to(r.batch_degree);
  j.at("colors_used").get_to(r.colors_used);
  j.at("iterations").get_to(r.iterations);
  j.at("total_changed").get_to(r.total_changed);
  j.at("total_visited").get_to(r.total_visited);
  j.at("coloring_time_s").get_to(r.coloring_time);
  j.at("total_time_s").get_to(r.total_time);
  j.at("per_edge_time_s").get_to(r.per_edge_time);
  if (!j.at("speedup").is_null()) r.speedup = j.at("speedup").get<double>();
  j.at("verified").get_to(r.verified);
  j.at("iter_edges").get_to(r.iter_edges);
  j.at("iter_groups").get_to(r.iter_groups);
  j.at("iter_changed").get_to(r.iter_changed);
  j.at("iter_time_s").get_to(r.iter_time);
  return r;
}

}  // namespace

void write_report(const std::vector<ReportRow>& rows, std::ostream& out, ReportFormat format) {
  if (format == ReportFormat::json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
    return;
  }
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  out << std::setprecision(9);
  for (const auto& r : rows) {
    out << csv_field(r.dataset) << ',' << r.n << ',' << r.m << ',' << r.max_core << ',' << r.mode
        << ',' << r.engine << ',' << r.threads << ',' << r.coloring << ',' << r.batch_size << ','
        << r.batch_degree << ',' << r.colors_used << ',' << r.iterations << ',' << r.total_changed
        << ',' << r.total_visited << ',' << r.coloring_time << ',' << r.total_time << ','
        << r.per_edge_time << ',';
    if (r.speedup) out << *r.speedup;
    out << ',' << (r.verified ? "true" : "false") << ',' << join(r.iter_edges) << ','
        << join(r.iter_groups) << ',' << join(r.iter_changed) << ',' << join(r.iter_time) << '\n';
  }
}

void emit_report(const std::vector<ReportRow>& rows, const std::filesystem::path& path,
                 ReportFormat format) {
  if (path == "-") {
    write_report(rows, std::cout, format);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing report to stdout");
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_report(rows, out, format);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<ReportRow> parse_report_json(std::istream& in) {
  std::vector<ReportRow> rows;
  try {
    const json arr = json::parse(in);
    for (const auto& j : arr) rows.push_back(from_json(j));
  } catch (const json::exception& e) {
    throw IoError(std::string("bad report json: ") + e.what());
  }
  return rows;
}

}  // namespace kcore
