#pragma once

// Exact small-instance channel analysis: connected-configuration enumeration,
// the configuration transition diagram and its node-disjoint maxflow, plus
// calculators for the closed-form capacity, delay and swarm-size bounds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "swarmcomm/codec.hpp"
#include "swarmcomm/configuration.hpp"
#include "swarmcomm/engine.hpp"
#include "swarmcomm/grid.hpp"

namespace swarmcomm {

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::size_t estimate) : std::runtime_error(what), estimate_(estimate) {}
  /// Number of configurations seen when the guard tripped.
  std::size_t estimate() const { return estimate_; }

 private:
  std::size_t estimate_;
};

inline constexpr std::size_t kDefaultGuard = 10'000'000;

namespace detail {

using IndexSet = std::vector<std::uint32_t>;

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : s) {
      h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// All connected k-subsets containing at least one seed, grown one adjacent
/// vertex at a time from the seeds.
inline std::vector<IndexSet> grow_connected(const GridGraph& g, const std::vector<Vertex>& seeds, std::size_t k,
                                            std::size_t guard) {
  if (k == 0) return {IndexSet{}};
  std::vector<std::vector<std::uint32_t>> adj(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (const auto& w : g.neighbor_list(g.vertex_at(i))) adj[i].push_back(static_cast<std::uint32_t>(g.index(w)));

  std::unordered_set<IndexSet, IndexSetHash> level;
  for (const auto& s : seeds) level.insert(IndexSet{static_cast<std::uint32_t>(g.index(s))});
  for (std::size_t size = 1; size < k; ++size) {
    std::unordered_set<IndexSet, IndexSetHash> grown;
    for (const auto& set : level) {
      for (auto v : set) {
        for (auto w : adj[v]) {
          if (std::binary_search(set.begin(), set.end(), w)) continue;
          IndexSet bigger = set;
          bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), w), w);
          grown.insert(std::move(bigger));
          if (grown.size() > guard)
            throw GuardExceeded("more than " + std::to_string(guard) + " connected configurations of size " +
                                    std::to_string(size + 1),
                                grown.size());
        }
      }
    }
    level = std::move(grown);
  }
  std::vector<IndexSet> out(level.begin(), level.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline Configuration to_configuration(const GridGraph& g, const IndexSet& s) {
  std::vector<Vertex> cells;
  cells.reserve(s.size());
  for (auto i : s) cells.push_back(g.vertex_at(i));
  return Configuration(std::move(cells));
}

}  // namespace detail

/// All connected k-configurations of a finite graph, in sorted order.
inline std::vector<Configuration> enumerate_connected(const GridGraph& g, std::size_t k,
                                                      std::size_t guard = kDefaultGuard) {
  std::vector<Vertex> seeds;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) seeds.push_back(g.vertex_at(i));
  std::vector<Configuration> out;
  for (const auto& s : detail::grow_connected(g, seeds, k, guard)) out.push_back(detail::to_configuration(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

/// Connected k-configurations touching the sender (vertex or column).
inline std::vector<Configuration> enumerate_initial(const GridGraph& g, std::size_t k, Membership mode,
                                                    std::size_t guard = kDefaultGuard) {
  std::vector<Vertex> seeds;
  if (mode == Membership::column && g.is_grid()) {
    for (int y = 0; y < g.rows(); ++y) seeds.push_back({g.sender().x, y});
  } else {
    seeds.push_back(g.sender());
  }
  std::vector<Configuration> out;
  for (const auto& s : detail::grow_connected(g, seeds, k, guard)) out.push_back(detail::to_configuration(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Configuration> enumerate_initial(const GridGraph& g, std::size_t k) {
  return enumerate_initial(g, k, g.default_membership());
}

/// n_j: configurations of j robots on a two-row strip whose first column is
/// occupied. n_0 = 1, n_1 = 2, n_j = 2 n_{j-1} + n_{j-2}.
inline std::uint64_t strip_column_count(std::size_t j) {
  std::uint64_t prev = 1, cur = 2;
  if (j == 0) return prev;
  for (std::size_t i = 1; i < j; ++i) {
    const std::uint64_t nxt = 2 * cur + prev;
    prev = cur;
    cur = nxt;
  }
  return cur;
}

/// Initial configurations containing the sender corner of G_8(m,2), m >= k:
/// n_{k-1} + n_{k-2}.
inline std::uint64_t strip_count(std::size_t k) {
  if (k < 2) throw DomainError("strip_count needs k >= 2");
  return strip_column_count(k - 1) + strip_column_count(k - 2);
}

/// Directed graph over all connected k-configurations; arcs are the engine's
/// legal single moves.
class TransitionDiagram {
 public:
  TransitionDiagram(const GridGraph& g, std::size_t k, Membership mode, std::size_t guard = kDefaultGuard)
      : graph_(g), k_(k), mode_(mode) {
    nodes_ = enumerate_connected(g, k, guard);
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
    arcs_.resize(nodes_.size());
    initial_.resize(nodes_.size());
    terminal_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const auto& c = nodes_[i];
      initial_[i] = g.touches_sender(c.cells(), mode);
      terminal_[i] = g.touches_receiver(c.cells(), mode);
      for (const auto& u : c) {
        for (const auto& v : g.neighbor_list(u)) {
          const Move mv{u, v};
          if (check_move(g, c, mv)) continue;
          arcs_[i].push_back(index_.at(c.moved(u, v)));
        }
      }
      std::sort(arcs_[i].begin(), arcs_[i].end());
    }
  }

  TransitionDiagram(const GridGraph& g, std::size_t k) : TransitionDiagram(g, k, g.default_membership()) {}

  const GridGraph& graph() const { return graph_; }
  std::size_t swarm_size() const { return k_; }
  Membership membership() const { return mode_; }
  std::size_t size() const { return nodes_.size(); }
  const Configuration& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<std::size_t>& arcs(std::size_t i) const { return arcs_[i]; }
  bool is_initial(std::size_t i) const { return initial_[i]; }
  bool is_terminal(std::size_t i) const { return terminal_[i]; }
  std::optional<std::size_t> find(const Configuration& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t initial_count() const { return static_cast<std::size_t>(std::count(initial_.begin(), initial_.end(), true)); }
  std::size_t arc_count() const {
    std::size_t n = 0;
    for (const auto& a : arcs_) n += a.size();
    return n;
  }

  /// True iff some terminal configuration is reachable from some initial one.
  bool terminal_reachable() const {
    std::vector<bool> seen(size(), false);
    std::queue<std::size_t> q;
    for (std::size_t i = 0; i < size(); ++i)
      if (initial_[i]) {
        seen[i] = true;
        q.push(i);
      }
    while (!q.empty()) {
      auto i = q.front();
      q.pop();
      if (terminal_[i]) return true;
      for (auto j : arcs_[i])
        if (!seen[j]) {
          seen[j] = true;
          q.push(j);
        }
    }
    return false;
  }

 private:
  GridGraph graph_;
  std::size_t k_;
  Membership mode_;
  std::vector<Configuration> nodes_;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> index_;
  std::vector<std::vector<std::size_t>> arcs_;
  std::vector<bool> initial_;
  std::vector<bool> terminal_;
};

namespace detail {

/// Dinic maxflow over an explicit arc list.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adj_(n), level_(n), iter_(n) {}

  void add_arc(std::size_t from, std::size_t to, int cap) {
    adj_[from].push_back({to, adj_[to].size(), cap});
    adj_[to].push_back({from, adj_[from].size() - 1, 0});
  }

  int max_flow(std::size_t s, std::size_t t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }

  struct Arc {
    std::size_t to;
    std::size_t rev;
    int cap;
  };
  std::vector<Arc>& arcs(std::size_t v) { return adj_[v]; }

 private:
  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (const auto& a : adj_[v])
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
    }
    return level_[t] >= 0;
  }

  // Iterative would be safer for deep diagrams; recursion depth is bounded by
  // the BFS level count, i.e. the shortest augmenting path length.
  int dfs(std::size_t v, std::size_t t, int f) {
    if (v == t) return f;
    for (auto& i = iter_[v]; i < adj_[v].size(); ++i) {
      auto& a = adj_[v][i];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      if (int d = dfs(a.to, t, std::min(f, a.cap))) {
        a.cap -= d;
        adj_[a.to][a.rev].cap += d;
        return d;
      }
    }
    return 0;
  }
};

}  // namespace detail

struct FlowResult {
  std::size_t mu = 0;
  /// Configuration-disjoint witness paths, initial first, terminal last.
  std::vector<std::vector<Configuration>> paths;
  /// Moves per witness path (virtual source/sink arcs excluded).
  std::vector<std::size_t> path_lengths;
  std::size_t initial_count = 0;
  std::size_t diagram_nodes = 0;
  std::size_t diagram_arcs = 0;

  /// Longest witness path: an upper indicator for the optimal delay, not the
  /// exact minimum over all path systems.
  std::size_t longest_path() const {
    return path_lengths.empty() ? 0 : *std::max_element(path_lengths.begin(), path_lengths.end());
  }
};

/// Node-disjoint maxflow from the initial to the terminal configurations
/// (node splitting, unit capacities).
inline FlowResult max_mu(const TransitionDiagram& d) {
  const std::size_t n = d.size();
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  detail::FlowNetwork net(2 * n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    net.add_arc(2 * i, 2 * i + 1, 1);
    if (d.is_initial(i)) net.add_arc(source, 2 * i, 1);
    if (d.is_terminal(i)) net.add_arc(2 * i + 1, sink, 1);
    for (auto j : d.arcs(i)) net.add_arc(2 * i + 1, 2 * j, 1);
  }
  FlowResult r;
  r.mu = static_cast<std::size_t>(net.max_flow(source, sink));
  r.initial_count = d.initial_count();
  r.diagram_nodes = n;
  r.diagram_arcs = d.arc_count();

  // Each unit leaving the source follows saturated forward arcs to the sink.
  auto used = [&net](const detail::FlowNetwork::Arc& a) { return a.cap == 0 && net.arcs(a.to)[a.rev].cap > 0; };
  for (auto& start : net.arcs(source)) {
    if (!used(start)) continue;
    std::vector<Configuration> path;
    std::size_t v = start.to;  // in-node
    while (true) {
      const std::size_t cfg = v / 2;
      path.push_back(d.node(cfg));
      const std::size_t out = 2 * cfg + 1;
      std::optional<std::size_t> nxt;
      bool to_sink = false;
      for (auto& a : net.arcs(out)) {
        if (a.to == 2 * cfg || !used(a)) continue;
        if (a.to == sink) {
          to_sink = true;
          break;
        }
        nxt = a.to;
        break;
      }
      if (to_sink || !nxt) break;
      v = *nxt;
    }
    r.path_lengths.push_back(path.size() - 1);
    r.paths.push_back(std::move(path));
  }
  return r;
}

inline FlowResult max_mu(const GridGraph& g, std::size_t k, Membership mode, std::size_t guard = kDefaultGuard) {
  return max_mu(TransitionDiagram(g, k, mode, guard));
}

inline FlowResult max_mu(const GridGraph& g, std::size_t k) { return max_mu(g, k, g.default_membership()); }

/// Algorithm that follows precomputed configuration-disjoint paths.
inline SwarmAlgorithm path_follower(const std::vector<std::vector<Configuration>>& paths) {
  auto table = std::make_shared<std::unordered_map<Configuration, MoveAction, ConfigurationHash>>();
  for (const auto& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      std::vector<Vertex> gone, came;
      std::set_difference(p[i].begin(), p[i].end(), p[i + 1].begin(), p[i + 1].end(), std::back_inserter(gone));
      std::set_difference(p[i + 1].begin(), p[i + 1].end(), p[i].begin(), p[i].end(), std::back_inserter(came));
      if (gone.size() != 1 || came.size() != 1) throw DomainError("path step is not a single move");
      table->emplace(p[i], Move{gone[0], came[0]});
    }
  }
  return {"path-follower", [table](const Configuration& c) -> MoveAction {
            auto it = table->find(c);
            return it == table->end() ? MoveAction{Stay{}} : it->second;
          }};
}

// Closed-form bounds.

/// Upper bound on initial configurations of G_8 (and on its capacity): 2^{6(k-1)}.
inline double counting_bound(std::size_t k) { return std::pow(2.0, 6.0 * (static_cast<double>(k) - 1.0)); }

/// Capacity bound on G_8(m,2): (1 + sqrt 2)^k.
inline double strip_bound(std::size_t k) { return std::pow(1.0 + std::sqrt(2.0), static_cast<double>(k)); }

/// Largest swarm size of a code that packs 2^{6(k-1)} configurations per size:
/// ceil(log2((63 alpha + 1) / 6)).
inline std::size_t k_alpha(std::size_t alpha) {
  return static_cast<std::size_t>(std::ceil(std::log2((63.0 * static_cast<double>(alpha) + 1.0) / 6.0)));
}

/// K* > H/6 + 1 - log2(k_alpha)/6 on G_8(m,n), n >= 2.
inline double kstar_lower_grid(double H, std::size_t alpha) {
  return H / 6.0 + 1.0 - std::log2(static_cast<double>(k_alpha(alpha))) / 6.0;
}

/// K* > 0.78 H - 0.79 log2(1 + 0.79 log2 alpha) on G_8(m,2).
inline double kstar_lower_strip(double H, std::size_t alpha) {
  return 0.78 * H - 0.79 * std::log2(1.0 + 0.79 * std::log2(static_cast<double>(alpha)));
}

struct BoundsReport {
  std::size_t k = 0;
  std::size_t m = 0;
  double dist = 0.0;
  double counting_bound = 0.0;
  std::uint64_t strip_initial_count = 0;
  double strip_bound = 0.0;
  std::optional<double> alg1_capacity;
  std::optional<double> alg1_delay_bound;
  std::optional<double> alg2_capacity;
  std::optional<double> alg2_delay;
  double delay_lower_bound = 0.0;
  std::optional<bool> capacity_chain;  // 2^{k-14} <= (1+sqrt2)^k <= 2^{6(k-1)}, k >= 15

  // Source-dependent rows.
  std::optional<std::size_t> alpha;
  std::optional<double> entropy;
  std::optional<std::size_t> k_alpha;
  std::optional<double> kstar_lower_grid;
  std::optional<double> kstar_lower_strip;
  std::optional<double> k_alg1_upper;
  std::optional<double> k_alg2_upper;
  std::optional<double> dstar_lower;
  std::optional<double> d_alg1_upper;
  std::optional<double> d_alg2_upper;

  bool pass() const { return capacity_chain.value_or(true); }
};

/// Numeric values of every closed-form bound at (k, m). `dist` defaults to the
/// strip's sender/receiver distance m - 1. Source rows need either a source or
/// an alphabet size (uniform source assumed).
inline BoundsReport bounds_report(std::size_t k, std::size_t m, const std::optional<SymbolSource>& src = std::nullopt,
                                  std::optional<std::size_t> alpha = std::nullopt,
                                  std::optional<double> dist = std::nullopt) {
  BoundsReport r;
  r.k = k;
  r.m = m;
  r.dist = dist.value_or(static_cast<double>(m) - 1.0);
  r.counting_bound = counting_bound(k);
  if (k >= 2) r.strip_initial_count = strip_count(k);
  r.strip_bound = strip_bound(k);
  if (k >= alg1::kMinSwarm) {
    r.alg1_capacity = std::pow(2.0, static_cast<double>(k - alg1::kControllerSize));
    r.alg1_delay_bound = alg1_delay_bound(k, m);
    r.capacity_chain = *r.alg1_capacity <= r.strip_bound && r.strip_bound <= r.counting_bound;
  }
  if (k >= 4) {
    r.alg2_capacity = std::pow(2.0, static_cast<double>(k / 2));
    r.alg2_delay = alg2_delay(k, m);
  }
  r.delay_lower_bound = delay_lower_bound(k, r.dist);

  if (src) {
    r.alpha = src->alpha();
    r.entropy = entropy(*src);
  } else if (alpha) {
    r.alpha = *alpha;
    r.entropy = std::log2(static_cast<double>(*alpha));
  }
  if (r.alpha) {
    const double H = *r.entropy;
    const std::size_t a = *r.alpha;
    r.k_alpha = k_alpha(a);
    r.kstar_lower_grid = kstar_lower_grid(H, a);
    r.kstar_lower_strip = kstar_lower_strip(H, a);
    r.k_alg1_upper = H + 15.0;
    r.k_alg2_upper = 2.0 * H;
    const double md = static_cast<double>(m);
    if (md > 2.0 * static_cast<double>(a)) {
      const double klow = std::max({1.0, *r.kstar_lower_grid, *r.kstar_lower_strip});
      r.dstar_lower = (md + 1.0 - 2.0 * static_cast<double>(a)) * klow;
    }
    r.d_alg1_upper = 10.0 * md * *r.k_alg1_upper;
    r.d_alg2_upper = md * *r.k_alg2_upper;
  }
  return r;
}

}  // namespace swarmcomm
