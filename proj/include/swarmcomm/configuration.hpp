#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "swarmcomm/grid.hpp"

namespace swarmcomm {

/// Set of occupied vertices, stored as a sorted coordinate list so equal sets
/// compare and hash equal. Connectivity is a property relative to a host
/// graph and is checked by the engine, not here.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::initializer_list<Vertex> cells) : Configuration(std::vector<Vertex>(cells)) {}
  explicit Configuration(std::vector<Vertex> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
      throw DomainError("configuration holds two robots on one vertex");
  }

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Vertex>& cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  bool contains(const Vertex& v) const { return std::binary_search(cells_.begin(), cells_.end(), v); }

  int min_x() const { return cells_.empty() ? 0 : cells_.front().x; }
  int max_x() const { return cells_.empty() ? 0 : cells_.back().x; }

  Configuration translated(int dx, int dy = 0) const {
    std::vector<Vertex> out = cells_;
    for (auto& v : out) v = v + Vertex{dx, dy};
    Configuration c;
    c.cells_ = std::move(out);
    return c;
  }

  /// (C \ {from}) ∪ {to} without any legality check.
  Configuration moved(const Vertex& from, const Vertex& to) const {
    std::vector<Vertex> out;
    out.reserve(cells_.size());
    for (const auto& v : cells_)
      if (v != from) out.push_back(v);
    out.push_back(to);
    return Configuration(std::move(out));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i) s += ",";
      s += swarmcomm::to_string(cells_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.cells_ <=> b.cells_; }

 private:
  std::vector<Vertex> cells_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& v : c) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v.x)) * 0x9E3779B97F4A7C15ull + static_cast<unsigned>(v.y);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Rows 0/1 occupancy per column for configurations on a two-row strip.
/// Bit 0 = row 0, bit 1 = row 1. Index 0 is column `first`.
struct ColumnProfile {
  int first = 0;
  std::vector<unsigned> masks;

  int last() const { return first + static_cast<int>(masks.size()) - 1; }
  unsigned at(int column) const { return masks[static_cast<std::size_t>(column - first)]; }
  int count(int column) const {
    unsigned m = at(column);
    return static_cast<int>((m & 1u) + ((m >> 1) & 1u));
  }
  /// Row of the single robot in `column`.
  int row_of_single(int column) const { return at(column) == 2u ? 1 : 0; }
  std::vector<int> doubled() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (masks[i] == 3u) out.push_back(first + static_cast<int>(i));
    return out;
  }
};

/// Profile of a configuration on a two-row strip; nullopt when a robot sits
/// outside rows 0/1 or a column inside the occupied span is empty.
inline std::optional<ColumnProfile> strip_profile(const Configuration& c) {
  if (c.empty()) return std::nullopt;
  ColumnProfile out;
  out.first = c.min_x();
  out.masks.assign(static_cast<std::size_t>(c.max_x() - c.min_x() + 1), 0u);
  for (const auto& v : c) {
    if (v.y < 0 || v.y > 1) return std::nullopt;
    out.masks[static_cast<std::size_t>(v.x - out.first)] |= 1u << v.y;
  }
  if (std::any_of(out.masks.begin(), out.masks.end(), [](unsigned m) { return m == 0u; })) return std::nullopt;
  return out;
}

}  // namespace swarmcomm
