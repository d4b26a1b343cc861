#pragma once

// Reference implementations used only by the tests. None of them call into
// the library beyond its plain data types.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "swarmcomm/grid.hpp"

namespace oracle {

using swarmcomm::Vertex;

inline bool king(const Vertex& a, const Vertex& b) {
  return a != b && std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1;
}
inline bool rook(const Vertex& a, const Vertex& b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1; }

/// Union-find over the cells; adjacency by the given predicate.
template <typename Adj>
bool connected(const std::vector<Vertex>& cells, Adj adj) {
  if (cells.empty()) return true;
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (adj(cells[i], cells[j])) parent[find(i)] = find(j);
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

/// Gait replay by hand rules on a strip with m columns: lift the leftmost,
/// walk row 1, drop past the right end. Returns the number of moves until a
/// robot first sits in column m-1.
inline std::size_t gait_delay(std::size_t k, std::size_t m) {
  int left = 0, right = static_cast<int>(k) - 1;
  int walker = -1;  // column of the row-1 robot, -1 when absent
  std::size_t t = 0;
  const int target = static_cast<int>(m) - 1;
  while (right < target) {
    if (k == 1) {
      ++left;
      ++right;
    } else if (walker < 0) {
      walker = left + 1;
      ++left;
    } else if (walker < right) {
      ++walker;
    } else {
      walker = -1;
      ++right;
    }
    ++t;
  }
  return t;
}

/// Connected k-subsets of an m x n king or rook grid by brute force over all
/// subsets (small windows only).
inline std::vector<std::vector<Vertex>> all_connected(int m, int n, std::size_t k, bool eight) {
  std::vector<Vertex> cells;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y) cells.push_back({x, y});
  std::vector<std::vector<Vertex>> out;
  const std::size_t N = cells.size();
  std::vector<int> pick(N, 0);
  std::fill(pick.end() - static_cast<long>(k), pick.end(), 1);
  do {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < N; ++i)
      if (pick[i]) s.push_back(cells[i]);
    std::sort(s.begin(), s.end());
    const bool ok = eight ? connected(s, king) : connected(s, rook);
    if (ok) out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Configuration diagram built from scratch: nodes are connected k-subsets,
/// arcs move one robot to an empty adjacent cell keeping connectivity.
struct Diagram {
  std::vector<std::vector<Vertex>> nodes;
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> initial, terminal;
};

inline Diagram build_diagram(int m, int n, std::size_t k, bool eight, bool column_membership) {
  Diagram d;
  d.nodes = all_connected(m, n, k, eight);
  auto adj = [eight](const Vertex& a, const Vertex& b) { return eight ? king(a, b) : rook(a, b); };
  auto index = [&](const std::vector<Vertex>& s) {
    auto it = std::lower_bound(d.nodes.begin(), d.nodes.end(), s);
    return static_cast<std::size_t>(it - d.nodes.begin());
  };
  d.out.resize(d.nodes.size());
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const auto& s = d.nodes[i];
    bool ini = false, ter = false;
    for (const auto& v : s) {
      ini = ini || (column_membership ? v.x == 0 : v == Vertex{0, 0});
      ter = ter || (column_membership ? v.x == m - 1 : v == Vertex{m - 1, 0});
    }
    d.initial.push_back(ini);
    d.terminal.push_back(ter);
    for (std::size_t r = 0; r < s.size(); ++r) {
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
          const Vertex to{s[r].x + dx, s[r].y + dy};
          if (to.x < 0 || to.x >= m || to.y < 0 || to.y >= n || !adj(s[r], to)) continue;
          if (std::find(s.begin(), s.end(), to) != s.end()) continue;
          auto t = s;
          t[r] = to;
          std::sort(t.begin(), t.end());
          const bool ok = eight ? connected(t, king) : connected(t, rook);
          if (ok) d.out[i].push_back(index(t));
        }
    }
  }
  return d;
}

/// Whether some terminal is reachable from some initial node avoiding `cut`.
inline bool separated(const Diagram& d, const std::vector<bool>& cut) {
  std::vector<bool> seen(d.nodes.size(), false);
  std::queue<std::size_t> q;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (d.initial[i] && !cut[i]) {
      seen[i] = true;
      q.push(i);
    }
  while (!q.empty()) {
    const auto v = q.front();
    q.pop();
    if (d.terminal[v]) return false;
    for (auto w : d.out[v])
      if (!seen[w] && !cut[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  return true;
}

/// Minimum number of configurations whose removal separates the initial from
/// the terminal ones; equals the maximum number of node-disjoint paths.
inline std::size_t min_vertex_cut(const Diagram& d) {
  const std::size_t N = d.nodes.size();
  for (std::size_t size = 0; size <= N; ++size) {
    std::vector<int> pick(N, 0);
    std::fill(pick.end() - static_cast<long>(size), pick.end(), 1);
    do {
      std::vector<bool> cut(N);
      for (std::size_t i = 0; i < N; ++i) cut[i] = pick[i] != 0;
      if (separated(d, cut)) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return N;
}

inline bool any_path(const Diagram& d) { return !separated(d, std::vector<bool>(d.nodes.size(), false)); }

}  // namespace oracle
