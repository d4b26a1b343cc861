#pragma once

// Caterpillar gait for small swarms: a row-0 line whose leftmost robot lifts
// to row 1, walks over the line and drops in front of it. One column per k
// moves; the swarm carries no bits.

#include <cstddef>
#include <string>
#include <vector>

#include "swarmcomm/configuration.hpp"
#include "swarmcomm/engine.hpp"

namespace swarmcomm::loco {

inline Configuration config(std::size_t k, int offset) {
  if (k == 0) throw DomainError("locomotion needs at least one robot");
  if (offset < 0) throw DomainError("negative offset");
  std::vector<Vertex> cells;
  for (std::size_t i = 0; i < k; ++i) cells.push_back({offset + static_cast<int>(i), 0});
  return Configuration(std::move(cells));
}

inline MoveAction next(const Configuration& c) {
  if (c.empty()) throw ClassificationError("empty swarm");
  std::vector<Vertex> base;
  std::vector<Vertex> walkers;
  for (const auto& v : c) {
    if (v.y == 0) base.push_back(v);
    else if (v.y == 1) walkers.push_back(v);
    else throw ClassificationError("robot outside rows 0/1: " + c.to_string());
  }
  if (walkers.size() > 1 || base.empty()) throw ClassificationError("not a gait shape: " + c.to_string());
  for (std::size_t i = 1; i < base.size(); ++i)
    if (base[i].x != base[i - 1].x + 1) throw ClassificationError("gait base is not contiguous: " + c.to_string());
  const int left = base.front().x;
  const int right = base.back().x;

  if (walkers.empty()) {
    if (c.size() == 1) return Move{base.front(), {left + 1, 0}};
    return Move{base.front(), {left + 1, 1}};
  }
  const Vertex w = walkers.front();
  if (w.x < left || w.x > right) throw ClassificationError("walker detached from the base: " + c.to_string());
  if (w.x < right) return Move{w, {w.x + 1, 1}};
  return Move{w, {right + 1, 0}};
}

inline SwarmAlgorithm algorithm() { return {"loco", next, true}; }

}  // namespace swarmcomm::loco
