#pragma once

// Host graphs for swarm locomotion: bounded 8-grids, bounded 4-grids and
// explicit undirected graphs, each with a sender and a receiver vertex.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swarmcomm {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A grid cell (x = column, y = row). Explicit graphs use x as the vertex id
/// and keep y = 0.
struct Vertex {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
  friend constexpr Vertex operator+(Vertex v, Vertex d) { return {v.x + d.x, v.y + d.y}; }
};

inline std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

enum class GraphKind { eight_grid, four_grid, explicit_graph };

/// How a configuration is matched against the sender/receiver. Grid hosts
/// use whole columns by default; explicit graphs only have vertices.
enum class Membership { vertex, column };

class GridGraph {
 public:
  static GridGraph eight_grid(int m, int n) { return grid(GraphKind::eight_grid, m, n); }
  static GridGraph four_grid(int m, int n) { return grid(GraphKind::four_grid, m, n); }

  /// Grid with explicit sender/receiver (e.g. a window centred on the sender).
  static GridGraph eight_grid(int m, int n, Vertex sender, Vertex receiver) {
    return grid(GraphKind::eight_grid, m, n, sender, receiver);
  }
  static GridGraph four_grid(int m, int n, Vertex sender, Vertex receiver) {
    return grid(GraphKind::four_grid, m, n, sender, receiver);
  }

  static GridGraph explicit_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                                  int sender, int receiver) {
    if (vertex_count <= 0) throw DomainError("explicit graph needs at least one vertex");
    GridGraph g;
    g.kind_ = GraphKind::explicit_graph;
    g.m_ = vertex_count;
    g.n_ = 1;
    g.adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
        throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
      if (u == v) continue;
      g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
      g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    g.sender_ = {sender, 0};
    g.receiver_ = {receiver, 0};
    g.check_endpoints();
    return g;
  }

  GraphKind kind() const { return kind_; }
  bool is_grid() const { return kind_ != GraphKind::explicit_graph; }
  int columns() const { return m_; }
  int rows() const { return n_; }
  Vertex sender() const { return sender_; }
  Vertex receiver() const { return receiver_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_); }

  Membership default_membership() const { return is_grid() ? Membership::column : Membership::vertex; }

  bool contains(const Vertex& v) const {
    if (!is_grid()) return v.y == 0 && v.x >= 0 && v.x < m_;
    return v.x >= 0 && v.x < m_ && v.y >= 0 && v.y < n_;
  }

  /// Dense index in [0, vertex_count()).
  std::size_t index(const Vertex& v) const {
    return static_cast<std::size_t>(v.y) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v.x);
  }
  Vertex vertex_at(std::size_t i) const {
    return {static_cast<int>(i % static_cast<std::size_t>(m_)), static_cast<int>(i / static_cast<std::size_t>(m_))};
  }

  bool adjacent(const Vertex& a, const Vertex& b) const {
    switch (kind_) {
      case GraphKind::eight_grid:
        return a != b && std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1;
      case GraphKind::four_grid:
        return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
      case GraphKind::explicit_graph: {
        const auto& list = adjacency_[static_cast<std::size_t>(a.x)];
        return std::binary_search(list.begin(), list.end(), b.x);
      }
    }
    return false;
  }

  /// Neighbour list in a fixed order (sorted for grids).
  std::vector<Vertex> neighbor_list(const Vertex& v) const {
    require(v);
    std::vector<Vertex> out;
    if (!is_grid()) {
      for (int w : adjacency_[static_cast<std::size_t>(v.x)]) out.push_back({w, 0});
      return out;
    }
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        if (dx == 0 && dy == 0) continue;
        if (kind_ == GraphKind::four_grid && dx != 0 && dy != 0) continue;
        Vertex w{v.x + dx, v.y + dy};
        if (contains(w)) out.push_back(w);
      }
    }
    return out;
  }

  void require(const Vertex& v) const {
    if (!contains(v)) throw DomainError("vertex " + to_string(v) + " is outside the host graph");
  }

  /// Whether `cells` meets the sender (or its column).
  bool touches_sender(const std::vector<Vertex>& cells, Membership mode) const {
    return touches(cells, sender_, mode);
  }
  bool touches_receiver(const std::vector<Vertex>& cells, Membership mode) const {
    return touches(cells, receiver_, mode);
  }

  std::string describe() const {
    switch (kind_) {
      case GraphKind::eight_grid:
        return "eight-grid(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
      case GraphKind::four_grid:
        return "four-grid(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
      case GraphKind::explicit_graph:
        return "explicit(" + std::to_string(m_) + " vertices)";
    }
    return "?";
  }

 private:
  GraphKind kind_ = GraphKind::eight_grid;
  int m_ = 1;
  int n_ = 1;
  Vertex sender_{};
  Vertex receiver_{};
  std::vector<std::vector<int>> adjacency_;

  static GridGraph grid(GraphKind kind, int m, int n) {
    return grid(kind, m, n, Vertex{0, 0}, Vertex{m - 1, 0});
  }
  static GridGraph grid(GraphKind kind, int m, int n, Vertex sender, Vertex receiver) {
    if (m <= 0 || n <= 0) throw DomainError("grid dimensions must be positive");
    GridGraph g;
    g.kind_ = kind;
    g.m_ = m;
    g.n_ = n;
    g.sender_ = sender;
    g.receiver_ = receiver;
    // A one-column grid has no distinct receiver; allow it for neighbourhood queries.
    if (m * n > 1) g.check_endpoints();
    return g;
  }

  void check_endpoints() const {
    require(sender_);
    require(receiver_);
    if (sender_ == receiver_) throw DomainError("sender and receiver must differ");
  }

  bool touches(const std::vector<Vertex>& cells, Vertex target, Membership mode) const {
    if (mode == Membership::column && is_grid()) {
      return std::any_of(cells.begin(), cells.end(), [&](const Vertex& c) { return c.x == target.x; });
    }
    return std::find(cells.begin(), cells.end(), target) != cells.end();
  }
};

/// Exact neighbour set of `v`.
inline std::set<Vertex> neighbors(const GridGraph& g, const Vertex& v) {
  auto list = g.neighbor_list(v);
  return {list.begin(), list.end()};
}

/// True iff the induced subgraph on `cells` is connected. The empty set counts
/// as connected.
inline bool is_connected(const GridGraph& g, const std::vector<Vertex>& cells) {
  if (cells.size() <= 1) return true;
  std::vector<bool> seen(cells.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (!seen[j] && g.adjacent(cells[i], cells[j])) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == cells.size();
}

inline bool is_connected(const GridGraph& g, const std::set<Vertex>& cells) {
  return is_connected(g, std::vector<Vertex>(cells.begin(), cells.end()));
}

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Breadth-first hop count; kUnreachable when no path exists.
inline std::size_t distance(const GridGraph& g, const Vertex& u, const Vertex& v) {
  g.require(u);
  g.require(v);
  if (u == v) return 0;
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[g.index(u)] = 0;
  frontier.push(u);
  while (!frontier.empty()) {
    Vertex a = frontier.front();
    frontier.pop();
    for (const Vertex& b : g.neighbor_list(a)) {
      auto& d = dist[g.index(b)];
      if (d != kUnreachable) continue;
      d = dist[g.index(a)] + 1;
      if (b == v) return d;
      frontier.push(b);
    }
  }
  return kUnreachable;
}

}  // namespace swarmcomm
