// swarmcomm: transmit, simulate, render, analyze, bounds, code build.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swarmcomm.hpp"

namespace {

using namespace swarmcomm;
using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { table, machine, ascii };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::machine;
  if (s == "ascii") return Format::ascii;
  throw UsageError("unknown --format '" + s + "'");
}

std::pair<std::size_t, std::size_t> parse_sweep(const std::string& text) {
  // k=a..b
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || text.substr(0, eq) != "k" || dots == std::string::npos || dots < eq)
    throw UsageError("--sweep expects k=a..b, got '" + text + "'");
  try {
    const auto a = std::stoul(text.substr(eq + 1, dots - eq - 1));
    const auto b = std::stoul(text.substr(dots + 2));
    if (a > b) throw UsageError("--sweep range is empty");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--sweep expects k=a..b, got '" + text + "'");
  }
}

Scheme parse_scheme(const std::string& s) {
  if (s == "alg1") return Scheme::alg1;
  if (s == "alg2") return Scheme::alg2;
  if (s == "loco") return Scheme::loco;
  throw UsageError("unknown --alg '" + s + "' (alg1, alg2, loco)");
}

std::size_t bit_length(Scheme s, std::size_t k) {
  switch (s) {
    case Scheme::alg1:
      if (k < alg1::kMinSwarm) throw UsageError("alg1 needs k >= 15 (at least one codeword bit)");
      return alg1::codeword_length(k);
    case Scheme::alg2:
      if (k < 4) throw UsageError("alg2 needs k >= 4 (codeword length floor(k/2) >= 2)");
      return alg2::codeword_length(k);
    case Scheme::loco:
      if (k == 0) throw UsageError("loco needs k >= 1");
      return 0;
  }
  return 0;
}

// ---- transmit / simulate ---------------------------------------------------

struct RunRecord {
  std::size_t k = 0;
  std::string bits;
  std::optional<std::string> received;
  std::optional<std::size_t> delay;
  std::size_t moves = 0;
  std::size_t violations = 0;
  std::vector<BoundCheck> checks;
  Configuration terminal;
  BehaviorTrace trace;

  bool pass() const {
    for (const auto& c : checks)
      if (c.applicable && !c.pass) return false;
    return true;
  }
};

RunRecord run_one(Scheme scheme, std::size_t k, std::size_t m, int n, const Bits& bits,
                  std::optional<std::size_t> max_steps) {
  const GridGraph g = GridGraph::eight_grid(static_cast<int>(m), n);
  const Configuration c0 = initial_configuration(scheme, k, bits);
  for (const auto& v : c0)
    if (!g.contains(v)) throw UsageError("initial swarm does not fit in G_8(" + std::to_string(m) + "," + std::to_string(n) + ")");
  RunRecord r;
  r.k = k;
  r.bits = scheme == Scheme::loco ? "singleton" : bits_to_string(bits);
  r.trace = run(g, algorithm_for(scheme), c0, max_steps.value_or(default_max_steps(k, m)));
  r.delay = r.trace.delay;
  r.moves = r.trace.move_count;
  r.violations = count_violations(g, r.trace);
  r.terminal = r.trace.last();
  if (r.delay) {
    try {
      if (scheme == Scheme::loco) {
        if (r.terminal.size() == k) r.received = "singleton";
      } else {
        r.received = bits_to_string(scheme == Scheme::alg1 ? alg1::decode_terminal(r.terminal, k)
                                                           : alg2::decode_terminal(r.terminal, k));
      }
    } catch (const ClassificationError&) {
    }
  }
  r.checks.push_back(make_check("receiver reached", r.delay ? 1 : 0, "==", 1));
  r.checks.push_back(make_check("decoded == sent", r.received == r.bits ? 1 : 0, "==", 1));
  if (r.delay) {
    const double d = static_cast<double>(*r.delay);
    r.checks.push_back(make_check("delay <= algorithm bound", d, "<=", symbol_delay_upper(scheme, k, m)));
    r.checks.push_back(make_check("delay >= k(dist - 2(k-1))", d, ">=",
                                  delay_lower_bound(k, static_cast<double>(m) - 1.0), m >= 2 * k));
  }
  r.checks.push_back(make_check("engine violations", static_cast<double>(r.violations), "==", 0));
  r.checks.push_back(make_check("Stay warnings", static_cast<double>(r.trace.warnings.size()), "==", 0));
  return r;
}

json run_json(const RunRecord& r) {
  json j;
  j["k"] = r.k;
  j["bits"] = r.bits;
  j["received"] = r.received ? json(*r.received) : json(nullptr);
  j["delay"] = r.delay ? json(*r.delay) : json(nullptr);
  j["moves"] = r.moves;
  j["violations"] = r.violations;
  j["checks"] = io::checks_json(r.checks);
  j["pass"] = r.pass();
  return j;
}

void print_checks(std::ostream& out, const std::vector<BoundCheck>& checks) {
  io::Table t({"check", "lhs", "rel", "rhs", "verdict"});
  for (const auto& c : checks)
    t.add({c.name, io::fmt(c.lhs), c.relation, io::fmt(c.rhs), !c.applicable ? "n/a" : c.pass ? "pass" : "FAIL"});
  t.print(out);
}

struct TransmitOptions {
  std::string alg;
  std::size_t k = 0;
  std::size_t m = 0;
  int n = 2;
  std::string bits;
  std::optional<std::size_t> symbol;
  std::string sweep;
  std::string format = "table";
  std::optional<std::size_t> max_steps;
  std::string trace_out;
};

Bits choose_bits(Scheme scheme, std::size_t k, const TransmitOptions& o) {
  const std::size_t len = bit_length(scheme, k);
  if (!o.bits.empty()) {
    if (scheme == Scheme::loco) throw UsageError("loco carries no bits");
    Bits b;
    try {
      b = parse_bits(o.bits);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (b.size() != len)
      throw UsageError("--bits has " + std::to_string(b.size()) + " bits, k = " + std::to_string(k) + " needs " +
                       std::to_string(len));
    return b;
  }
  const std::size_t sym = o.symbol.value_or(0);
  if (len < 63 && sym >= (std::uint64_t{1} << len))
    throw UsageError("--symbol " + std::to_string(sym) + " exceeds 2^" + std::to_string(len));
  return to_bits(sym, len);
}

int cmd_transmit(const TransmitOptions& o, bool simulate) {
  const Scheme scheme = parse_scheme(o.alg);
  const Format fmt = parse_format(o.format);
  if (o.m == 0) throw UsageError("--m is required");
  if (o.n < 1) throw UsageError("--n must be positive");

  if (!o.sweep.empty()) {
    if (simulate) throw UsageError("simulate runs a single transmission");
    const auto [ka, kb] = parse_sweep(o.sweep);
    json out = json::array();
    io::Table t({"k", "codewords", "min delay", "max delay", "decoded", "distinct", "violations", "verdict"});
    bool all = true;
    for (std::size_t k = ka; k <= kb; ++k) {
      const std::size_t len = bit_length(scheme, k);
      const std::size_t count = std::size_t{1} << len;
      std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0, decoded = 0, viol = 0;
      bool pass = true;
      std::set<Configuration> terminals;
      json runs = json::array();
      for (std::size_t s = 0; s < count; ++s) {
        const auto r = run_one(scheme, k, o.m, o.n, to_bits(s, len), o.max_steps);
        pass = pass && r.pass();
        if (r.delay) {
          lo = std::min(lo, *r.delay);
          hi = std::max(hi, *r.delay);
        }
        decoded += r.received == r.bits ? 1 : 0;
        viol += r.violations;
        terminals.insert(r.terminal);
        runs.push_back(run_json(r));
      }
      const bool distinct = terminals.size() == count;
      pass = pass && distinct;
      all = all && pass;
      json row;
      row["k"] = k;
      row["codewords"] = count;
      row["min_delay"] = lo;
      row["max_delay"] = hi;
      row["decoded"] = decoded;
      row["distinct_terminals"] = distinct;
      row["violations"] = viol;
      row["runs"] = runs;
      row["pass"] = pass;
      out.push_back(row);
      t.add({std::to_string(k), std::to_string(count), std::to_string(lo), std::to_string(hi), std::to_string(decoded),
             distinct ? "yes" : "no", std::to_string(viol), pass ? "pass" : "FAIL"});
    }
    if (fmt == Format::machine) {
      json j{{"alg", o.alg}, {"m", o.m}, {"n", o.n}, {"sweep", out}, {"pass", all}};
      std::cout << j.dump(2) << '\n';
    } else {
      t.print(std::cout);
    }
    return all ? 0 : 1;
  }

  if (o.k == 0) throw UsageError("--k is required");
  const Bits bits = choose_bits(scheme, o.k, o);
  const auto r = run_one(scheme, o.k, o.m, o.n, bits, o.max_steps);

  if (simulate || !o.trace_out.empty()) {
    if (o.trace_out.empty() || o.trace_out == "-") {
      io::write_trace(std::cout, r.trace);
    } else {
      std::ofstream f(o.trace_out);
      if (!f) throw UsageError("cannot write " + o.trace_out);
      io::write_trace(f, r.trace);
    }
    if (simulate && (o.trace_out.empty() || o.trace_out == "-")) return r.pass() ? 0 : 1;
  }

  if (fmt == Format::machine) {
    json j = run_json(r);
    j["alg"] = o.alg;
    j["m"] = o.m;
    j["n"] = o.n;
    std::cout << j.dump(2) << '\n';
  } else if (fmt == Format::ascii) {
    std::cout << "t=0\n" << io::render_ascii(r.trace.steps.front(), static_cast<int>(o.m), o.n);
    std::cout << "t=" << r.trace.steps.size() - 1 << '\n'
              << io::render_ascii(r.terminal, static_cast<int>(o.m), o.n);
  } else {
    std::cout << "alg " << o.alg << "  k " << o.k << "  m " << o.m << "  n " << o.n << '\n'
              << "sent      " << r.bits << '\n'
              << "received  " << r.received.value_or("-") << '\n'
              << "delay     " << (r.delay ? std::to_string(*r.delay) : "never") << '\n'
              << "moves     " << r.moves << "\n\n";
    print_checks(std::cout, r.checks);
  }
  return r.pass() ? 0 : 1;
}

// ---- render ---------------------------------------------------------------

int cmd_render(const std::string& path, std::optional<int> m, std::optional<int> n, std::size_t every) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  const auto frames = io::read_trace(f);
  int mx = 0, my = 1;
  for (const auto& fr : frames)
    for (const auto& v : fr.cells) {
      mx = std::max(mx, v.x);
      my = std::max(my, v.y);
    }
  const int width = m.value_or(mx + 1);
  const int height = n.value_or(my + 1);
  if (every == 0) throw UsageError("--every must be positive");
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (i % every != 0 && i + 1 != frames.size()) continue;
    const auto& fr = frames[i];
    std::cout << "t=" << fr.t;
    if (fr.move) std::cout << "  " << to_string(MoveAction{*fr.move});
    std::cout << '\n' << io::render_ascii(fr.cells, width, height) << '\n';
  }
  return 0;
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeOptions {
  std::string graph;
  int m = 0;
  int n = 2;
  std::size_t k = 0;
  std::string membership;
  std::size_t guard = kDefaultGuard;
  std::string format = "table";
  bool show_paths = false;
};

int cmd_analyze(const AnalyzeOptions& o) {
  const Format fmt = parse_format(o.format);
  if (o.k == 0) throw UsageError("--k is required");
  std::optional<GridGraph> g;
  std::string kind = o.graph;
  if (o.graph.rfind("file:", 0) == 0) {
    std::ifstream f(o.graph.substr(5));
    if (!f) throw UsageError("cannot read " + o.graph.substr(5));
    try {
      g = io::read_graph(f);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    kind = "file";
  } else {
    if (o.m < 1) throw UsageError("--m is required for grid graphs");
    if (o.graph == "strip") g = GridGraph::eight_grid(o.m, 2);
    else if (o.graph == "eightgrid") g = GridGraph::eight_grid(o.m, o.n);
    else if (o.graph == "fourgrid") g = GridGraph::four_grid(o.m, o.n);
    else throw UsageError("unknown --graph '" + o.graph + "' (strip, eightgrid, fourgrid, file:PATH)");
  }
  Membership mode = g->default_membership();
  if (o.membership == "vertex") mode = Membership::vertex;
  else if (o.membership == "column") mode = Membership::column;
  else if (!o.membership.empty()) throw UsageError("--membership is vertex or column");

  const auto flow = max_mu(*g, o.k, mode, o.guard);
  const std::size_t at_vertex = enumerate_initial(*g, o.k, Membership::vertex, o.guard).size();

  std::vector<BoundCheck> checks;
  checks.push_back(make_check("mu <= |C_I|", static_cast<double>(flow.mu), "<=", static_cast<double>(flow.initial_count)));
  const bool eight = g->is_grid() && g->kind() == GraphKind::eight_grid;
  if (eight) {
    checks.push_back(make_check("|C_I at sender| <= 2^(6(k-1))", static_cast<double>(at_vertex), "<=",
                                counting_bound(o.k)));
  }
  if (kind == "strip" && o.k >= 2) {
    const bool fits = static_cast<std::size_t>(o.m) >= o.k;
    checks.push_back(make_check("|C_I at sender| == n_{k-1} + n_{k-2}", static_cast<double>(at_vertex), "==",
                                static_cast<double>(strip_count(o.k)), fits));
    checks.push_back(make_check("|C_I at sender| < (1+sqrt2)^k", static_cast<double>(at_vertex), "<",
                                strip_bound(o.k)));
  }

  bool pass = true;
  for (const auto& c : checks) pass = pass && (!c.applicable || c.pass);

  if (fmt == Format::machine) {
    json j = io::flow_json(flow);
    if (!o.show_paths) j.erase("paths");
    j["graph"] = g->describe();
    j["k"] = o.k;
    j["membership"] = mode == Membership::vertex ? "vertex" : "column";
    j["initial_at_sender_vertex"] = at_vertex;
    j["checks"] = io::checks_json(checks);
    j["pass"] = pass;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "graph          " << g->describe() << '\n'
              << "k              " << o.k << '\n'
              << "membership     " << (mode == Membership::vertex ? "vertex" : "column") << '\n'
              << "|C_I|          " << flow.initial_count << '\n'
              << "|C_I| (vertex) " << at_vertex << '\n'
              << "diagram        " << flow.diagram_nodes << " nodes, " << flow.diagram_arcs << " arcs\n"
              << "mu             " << flow.mu << '\n'
              << "witness paths  " << flow.paths.size() << ", longest " << flow.longest_path() << " moves\n";
    if (!flow.path_lengths.empty()) {
      std::cout << "path lengths  ";
      for (auto l : flow.path_lengths) std::cout << ' ' << l;
      std::cout << '\n';
    }
    if (o.show_paths) {
      for (std::size_t i = 0; i < flow.paths.size(); ++i) {
        std::cout << "path " << i << ":";
        for (const auto& c : flow.paths[i]) std::cout << ' ' << c.to_string();
        std::cout << '\n';
      }
    }
    std::cout << '\n';
    print_checks(std::cout, checks);
  }
  return pass ? 0 : 1;
}

// ---- sources ----------------------------------------------------------------

struct SourceOptions {
  std::string probs;
  std::size_t alpha = 0;
  std::string shape = "uniform";
  double ratio = 0.5;
  std::size_t random = 0;
  std::uint64_t seed = 1;
};

/// Random source from the raw mt19937_64 stream (portable across standard
/// libraries, unlike the distribution templates).
SymbolSource random_source(std::size_t alpha, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> w(alpha);
  for (auto& x : w) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 + 1e-9;
  return SymbolSource::from_weights(std::move(w));
}

std::optional<SymbolSource> load_source(const SourceOptions& s, bool quiet) {
  int given = (!s.probs.empty() ? 1 : 0) + (s.alpha > 0 ? 1 : 0) + (s.random > 0 ? 1 : 0);
  if (given > 1) throw UsageError("give only one of --probs, --alpha, --random");
  if (!s.probs.empty()) {
    std::ifstream f(s.probs);
    if (!f) throw UsageError("cannot read " + s.probs);
    try {
      auto loaded = io::read_source(f);
      if (loaded.reordered && !quiet) std::cerr << "warning: probabilities were sorted into descending order\n";
      return loaded.source;
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  if (s.alpha > 0) {
    if (s.shape == "uniform") return SymbolSource::uniform(s.alpha);
    if (s.shape == "geometric") return SymbolSource::geometric(s.alpha, s.ratio);
    throw UsageError("--source is uniform or geometric");
  }
  if (s.random > 0) return random_source(s.random, s.seed);
  return std::nullopt;
}

// ---- bounds ---------------------------------------------------------------

int cmd_bounds(std::size_t k, std::size_t m, const SourceOptions& s, std::optional<double> dist,
               const std::string& format) {
  const Format fmt = parse_format(format);
  if (k == 0 || m == 0) throw UsageError("--k and --m are required");
  const auto src = load_source(s, fmt == Format::machine);
  const auto r = bounds_report(k, m, src, std::nullopt, dist);
  if (fmt == Format::machine) {
    std::cout << io::bounds_json(r).dump(2) << '\n';
    return r.pass() ? 0 : 1;
  }
  auto opt = [](const auto& v) -> std::string { return v ? io::fmt(static_cast<double>(*v)) : "-"; };
  io::Table t({"quantity", "value"});
  t.add({"k", std::to_string(k)});
  t.add({"m", std::to_string(m)});
  t.add({"dist(u_S, u_R)", io::fmt(r.dist)});
  t.add({"initial configs on G_8 <= 2^(6(k-1))", io::fmt(r.counting_bound)});
  t.add({"initial configs on G_8(m,2) = n_{k-1}+n_{k-2}", std::to_string(r.strip_initial_count)});
  t.add({"capacity on G_8(m,2) < (1+sqrt2)^k", io::fmt(r.strip_bound)});
  t.add({"alg1 capacity 2^(k-14)", opt(r.alg1_capacity)});
  t.add({"alg1 delay <= (10k-123.5)(m-k)", opt(r.alg1_delay_bound)});
  t.add({"alg2 capacity 2^floor(k/2)", opt(r.alg2_capacity)});
  t.add({"alg2 delay k(m-k)", opt(r.alg2_delay)});
  t.add({"delay >= k(dist-2(k-1))", io::fmt(r.delay_lower_bound)});
  t.add({"2^(k-14) <= (1+sqrt2)^k <= 2^(6(k-1))",
         r.capacity_chain ? (*r.capacity_chain ? "holds" : "FAILS") : "-"});
  if (r.alpha) {
    t.add({"alphabet size", std::to_string(*r.alpha)});
    t.add({"H(S)", opt(r.entropy)});
    t.add({"k_alpha", opt(r.k_alpha)});
    t.add({"K* lower (G_8)", opt(r.kstar_lower_grid)});
    t.add({"K* lower (G_8(m,2))", opt(r.kstar_lower_strip)});
    t.add({"K alg1 < H+15", opt(r.k_alg1_upper)});
    t.add({"K alg2 < 2H", opt(r.k_alg2_upper)});
    t.add({"D* lower", opt(r.dstar_lower)});
    t.add({"D alg1 upper", opt(r.d_alg1_upper)});
    t.add({"D alg2 upper", opt(r.d_alg2_upper)});
  }
  t.print(std::cout);
  return r.pass() ? 0 : 1;
}

// ---- code build -----------------------------------------------------------

int cmd_code_build(const std::string& alg, const SourceOptions& s, std::optional<std::size_t> fixed_k,
                   std::optional<std::size_t> m_opt, const std::string& format) {
  const Format fmt = parse_format(format);
  Family family;
  try {
    family = parse_family(alg);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  auto src = load_source(s, fmt == Format::machine);
  if (!src) throw UsageError("a source is required: --probs, --alpha or --random");
  Code code;
  try {
    code = fixed_k ? build_fixed_code(family, *fixed_k, src->alpha()) : build_variable_code(family, *src);
  } catch (const CapacityError& e) {
    throw UsageError(e.what());
  }
  const std::size_t m = m_opt.value_or(3 * code.max_k());
  if (m < code.max_k() + 1) throw UsageError("--m must exceed the largest swarm size");
  const auto rep = bound_check(code, *src, m);

  if (fmt == Format::machine) {
    json j;
    j["code"] = io::code_json(code, &*src);
    j["report"] = io::bound_report_json(rep);
    j["pass"] = rep.pass();
    std::cout << j.dump(2) << '\n';
    return rep.pass() ? 0 : 1;
  }
  io::Table t({"symbol", "p", "scheme", "k", "codeword", "delay", "decoded"});
  for (std::size_t i = 0; i < code.entries.size(); ++i) {
    const auto& e = code.entries[i];
    const auto& run = rep.runs[i];
    t.add({std::to_string(e.symbol), io::fmt((*src)[e.symbol], 6), to_string(e.scheme), std::to_string(e.k),
           e.scheme == Scheme::loco ? "singleton" : bits_to_string(e.bits),
           run.delay ? std::to_string(*run.delay) : "never",
           run.received == std::optional<std::size_t>(e.symbol) ? "yes" : "no"});
  }
  t.print(std::cout);
  std::cout << "\nH(S) " << io::fmt(rep.entropy) << "   K " << io::fmt(rep.K) << "   D " << io::fmt(rep.D)
            << "   m " << m << "\n\n";
  print_checks(std::cout, rep.checks);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information transmission by oblivious robot swarms on grids"};
  app.require_subcommand(1);

  TransmitOptions tx;
  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--alg", tx.alg, "alg1, alg2 or loco")->required();
    sub->add_option("--k", tx.k, "swarm size");
    sub->add_option("--m", tx.m, "grid columns")->required();
    sub->add_option("--n", tx.n, "grid rows (default 2)");
    auto* bits = sub->add_option("--bits", tx.bits, "codeword, e.g. 010");
    auto* symbol = sub->add_option("--symbol", tx.symbol, "codeword index (natural binary)");
    bits->excludes(symbol);
    sub->add_option("--max-steps", tx.max_steps, "step budget (default 12km)");
    sub->add_option("--format", tx.format, "table, json or ascii");
  };
  auto* transmit = app.add_subcommand("transmit", "send one codeword (or sweep all) and check delay bounds");
  add_run_options(transmit);
  transmit->add_option("--sweep", tx.sweep, "k=a..b: every codeword of every size in range");
  transmit->add_option("--trace", tx.trace_out, "also write the trace as JSON lines");

  auto* simulate = app.add_subcommand("simulate", "write the trace of one transmission as JSON lines");
  add_run_options(simulate);
  simulate->add_option("--out", tx.trace_out, "output file (default stdout)");

  std::string trace_path;
  std::optional<int> rm, rn;
  std::size_t every = 1;
  auto* render = app.add_subcommand("render", "replay a trace file as ASCII frames");
  render->add_option("--trace", trace_path, "trace file (JSON lines)")->required();
  render->add_option("--m", rm, "frame width (default: fit)");
  render->add_option("--n", rn, "frame height (default: fit)");
  render->add_option("--every", every, "print every N-th frame");

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "exact capacity by maxflow over the transition diagram");
  analyze->add_option("--graph", an.graph, "strip, eightgrid, fourgrid or file:PATH")->required();
  analyze->add_option("--m", an.m, "grid columns");
  analyze->add_option("--n", an.n, "grid rows (default 2)");
  analyze->add_option("--k", an.k, "swarm size")->required();
  analyze->add_option("--membership", an.membership, "vertex or column (default: column on grids)");
  analyze->add_option("--guard", an.guard, "enumeration limit");
  analyze->add_option("--format", an.format, "table or json");
  analyze->add_flag("--paths", an.show_paths, "list witness paths");

  SourceOptions so;
  auto add_source_options = [&](CLI::App* sub) {
    sub->add_option("--probs", so.probs, "source file {\"probs\": [...]}");
    sub->add_option("--alpha", so.alpha, "alphabet size of a generated source");
    sub->add_option("--source", so.shape, "uniform or geometric (with --alpha)");
    sub->add_option("--ratio", so.ratio, "geometric ratio (default 0.5)");
    sub->add_option("--random", so.random, "random source with N symbols");
    sub->add_option("--seed", so.seed, "seed for --random");
  };

  std::size_t bk = 0, bm = 0;
  std::optional<double> bdist;
  std::string bformat = "table";
  auto* bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds");
  bounds->add_option("--k", bk, "swarm size")->required();
  bounds->add_option("--m", bm, "strip columns")->required();
  bounds->add_option("--dist", bdist, "sender/receiver distance (default m-1)");
  bounds->add_option("--format", bformat, "table or json");
  add_source_options(bounds);

  std::string calg;
  std::optional<std::size_t> ck, cm;
  std::string cformat = "table";
  auto* code = app.add_subcommand("code", "variable-size codes");
  code->require_subcommand(1);
  auto* build = code->add_subcommand("build", "build a code, transmit every symbol and check the bounds");
  build->add_option("--alg", calg, "alg1 or alg2")->required();
  build->add_option("--k", ck, "fixed swarm size (default: variable tower code)");
  build->add_option("--m", cm, "strip columns (default 3 * max k)");
  build->add_option("--format", cformat, "table or json");
  add_source_options(build);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*transmit) return cmd_transmit(tx, false);
    if (*simulate) return cmd_transmit(tx, true);
    if (*render) return cmd_render(trace_path, rm, rn, every);
    if (*analyze) return cmd_analyze(an);
    if (*bounds) return cmd_bounds(bk, bm, so, bdist, bformat);
    if (*build) return cmd_code_build(calg, so, ck, cm, cformat);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const io::FormatError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const EngineAbort& e) {
    std::cerr << "engine abort: " << e.what() << " (after " << e.prefix().steps.size() << " configurations)\n";
    return 1;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
