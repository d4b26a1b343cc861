#pragma once

// Text formats: trace JSON lines, ASCII frames, explicit graph files, source
// distributions, code tables and report serialization.

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "swarmcomm/analysis.hpp"
#include "swarmcomm/codec.hpp"
#include "swarmcomm/configuration.hpp"
#include "swarmcomm/engine.hpp"
#include "swarmcomm/grid.hpp"

namespace swarmcomm::io {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json cells_json(const Configuration& c) {
  json cells = json::array();
  for (const auto& v : c) cells.push_back({v.x, v.y});
  return cells;
}

inline json move_json(const MoveAction& a) {
  if (is_stay(a)) return nullptr;
  const auto& mv = std::get<Move>(a);
  return json::array({json::array({mv.from.x, mv.from.y}), json::array({mv.to.x, mv.to.y})});
}

/// One object per step: {"t", "cells", "move"}; "move" is the move that
/// produced this configuration (null at t = 0 and after a Stay).
inline void write_trace(std::ostream& out, const BehaviorTrace& trace) {
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    json line;
    line["t"] = t;
    line["cells"] = cells_json(trace.steps[t]);
    line["move"] = t == 0 ? json(nullptr) : move_json(trace.moves[t - 1]);
    out << line.dump() << '\n';
  }
}

struct TraceFrame {
  std::size_t t = 0;
  Configuration cells;
  std::optional<Move> move;
};

inline std::vector<TraceFrame> read_trace(std::istream& in) {
  std::vector<TraceFrame> frames;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      TraceFrame f;
      f.t = j.at("t").get<std::size_t>();
      std::vector<Vertex> cells;
      for (const auto& c : j.at("cells")) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
      f.cells = Configuration(std::move(cells));
      const auto& mv = j.at("move");
      if (!mv.is_null())
        f.move = Move{{mv.at(0).at(0).get<int>(), mv.at(0).at(1).get<int>()},
                      {mv.at(1).at(0).get<int>(), mv.at(1).at(1).get<int>()}};
      frames.push_back(std::move(f));
    } catch (const json::exception& e) {
      throw FormatError("trace line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return frames;
}

/// n text rows, row n-1 first; '.' empty, 'o' robot.
inline std::string render_ascii(const Configuration& c, int m, int n) {
  std::vector<std::string> rows(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(m), '.'));
  for (const auto& v : c) {
    if (v.x < 0 || v.x >= m || v.y < 0 || v.y >= n)
      throw DomainError("cell " + to_string(v) + " outside the " + std::to_string(m) + "x" + std::to_string(n) + " frame");
    rows[static_cast<std::size_t>(v.y)][static_cast<std::size_t>(v.x)] = 'o';
  }
  std::string out;
  for (int y = n - 1; y >= 0; --y) out += rows[static_cast<std::size_t>(y)] + '\n';
  return out;
}

/// "V E", then E lines "u v", then "S R".
inline GridGraph read_graph(std::istream& in) {
  long long vertices = -1, edges = -1;
  if (!(in >> vertices >> edges) || vertices <= 0 || edges < 0) throw FormatError("graph header must be 'V E'");
  std::vector<std::pair<int, int>> list;
  for (long long i = 0; i < edges; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw FormatError("graph file ends after " + std::to_string(i) + " edges");
    list.emplace_back(u, v);
  }
  int s = 0, r = 0;
  if (!(in >> s >> r)) throw FormatError("graph file lacks the 'S R' line");
  return GridGraph::explicit_graph(static_cast<int>(vertices), list, s, r);
}

inline void write_graph(std::ostream& out, int vertices, const std::vector<std::pair<int, int>>& edges, int s, int r) {
  out << vertices << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  out << s << ' ' << r << '\n';
}

struct LoadedSource {
  SymbolSource source;
  bool reordered = false;
};

/// {"probs": [...]}: normalized and sorted descending.
inline LoadedSource read_source(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(std::string("source file is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("probs") || !j["probs"].is_array() || j["probs"].empty())
    throw FormatError("source file must be {\"probs\": [..]} with at least one entry");
  std::vector<double> w;
  for (const auto& p : j["probs"]) {
    if (!p.is_number()) throw FormatError("probabilities must be numbers");
    w.push_back(p.get<double>());
  }
  bool reordered = false;
  auto src = SymbolSource::from_weights(std::move(w), &reordered);
  return {std::move(src), reordered};
}

inline json code_json(const Code& code, const SymbolSource* src = nullptr) {
  json j;
  j["family"] = to_string(code.family);
  j["variable"] = code.variable;
  j["entries"] = json::array();
  for (const auto& e : code.entries) {
    json row;
    row["symbol"] = e.symbol;
    row["scheme"] = to_string(e.scheme);
    row["k"] = e.k;
    row["bits"] = e.scheme == Scheme::loco ? json("singleton") : json(bits_to_string(e.bits));
    row["initial"] = cells_json(e.initial);
    if (src) row["p"] = (*src)[e.symbol];
    j["entries"].push_back(row);
  }
  if (src) {
    j["K"] = code.average_size(*src);
    j["H"] = entropy(*src);
  }
  return j;
}

inline json checks_json(const std::vector<BoundCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"lhs", c.lhs},
                   {"relation", c.relation},
                   {"rhs", c.rhs},
                   {"applicable", c.applicable},
                   {"pass", c.pass}});
  }
  return arr;
}

inline json bound_report_json(const BoundReport& r) {
  json j;
  j["m"] = r.m;
  j["H"] = r.entropy;
  j["K"] = r.K;
  j["D"] = r.D;
  j["runs"] = json::array();
  for (const auto& run : r.runs) {
    j["runs"].push_back({{"symbol", run.symbol},
                         {"k", run.k},
                         {"scheme", to_string(run.scheme)},
                         {"received", run.received ? json(*run.received) : json(nullptr)},
                         {"delay", run.delay ? json(*run.delay) : json(nullptr)}});
  }
  j["checks"] = checks_json(r.checks);
  j["pass"] = r.pass();
  return j;
}

namespace detail {
template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}
}  // namespace detail

inline json bounds_json(const BoundsReport& r) {
  using detail::opt;
  json j;
  j["k"] = r.k;
  j["m"] = r.m;
  j["dist"] = r.dist;
  j["counting_bound"] = r.counting_bound;
  j["strip_initial_count"] = r.strip_initial_count;
  j["strip_bound"] = r.strip_bound;
  j["alg1_capacity"] = opt(r.alg1_capacity);
  j["alg1_delay_bound"] = opt(r.alg1_delay_bound);
  j["alg2_capacity"] = opt(r.alg2_capacity);
  j["alg2_delay"] = opt(r.alg2_delay);
  j["delay_lower_bound"] = r.delay_lower_bound;
  j["capacity_chain"] = opt(r.capacity_chain);
  j["alpha"] = opt(r.alpha);
  j["H"] = opt(r.entropy);
  j["k_alpha"] = opt(r.k_alpha);
  j["kstar_lower_grid"] = opt(r.kstar_lower_grid);
  j["kstar_lower_strip"] = opt(r.kstar_lower_strip);
  j["k_alg1_upper"] = opt(r.k_alg1_upper);
  j["k_alg2_upper"] = opt(r.k_alg2_upper);
  j["dstar_lower"] = opt(r.dstar_lower);
  j["d_alg1_upper"] = opt(r.d_alg1_upper);
  j["d_alg2_upper"] = opt(r.d_alg2_upper);
  j["pass"] = r.pass();
  return j;
}

inline json flow_json(const FlowResult& f) {
  json j;
  j["mu"] = f.mu;
  j["initial_count"] = f.initial_count;
  j["diagram_nodes"] = f.diagram_nodes;
  j["diagram_arcs"] = f.diagram_arcs;
  j["path_lengths"] = f.path_lengths;
  j["longest_witness_path"] = f.longest_path();
  j["paths"] = json::array();
  for (const auto& p : f.paths) {
    json path = json::array();
    for (const auto& c : p) path.push_back(cells_json(c));
    j["paths"].push_back(path);
  }
  return j;
}

/// Left-aligned plain-text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
      const auto& r = rows_[ri];
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      out << line << '\n';
      if (ri == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
        out << std::string(total, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline std::string fmt(double v, int precision = 4) {
  std::ostringstream os;
  if (std::abs(v) >= 1e15) {
    os << std::setprecision(6) << std::scientific << v;
    return os.str();
  }
  os << std::setprecision(precision) << std::fixed << v;
  std::string s = os.str();
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  return s;
}

}  // namespace swarmcomm::io
