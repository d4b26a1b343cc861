#pragma once

// Simulation kernel: one algorithm-chosen single-robot move per time step.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "swarmcomm/configuration.hpp"
#include "swarmcomm/grid.hpp"

namespace swarmcomm {

struct Stay {
  friend bool operator==(const Stay&, const Stay&) = default;
};

struct Move {
  Vertex from;
  Vertex to;
  friend bool operator==(const Move&, const Move&) = default;
};

using MoveAction = std::variant<Stay, Move>;

inline bool is_stay(const MoveAction& a) { return std::holds_alternative<Stay>(a); }

inline std::string to_string(const MoveAction& a) {
  if (is_stay(a)) return "Stay";
  const auto& mv = std::get<Move>(a);
  return "Move(" + to_string(mv.from) + "->" + to_string(mv.to) + ")";
}

inline MoveAction translated(const MoveAction& a, int dx) {
  if (is_stay(a)) return a;
  const auto& mv = std::get<Move>(a);
  return Move{mv.from + Vertex{dx, 0}, mv.to + Vertex{dx, 0}};
}

/// Which model constraint a rejected move violates.
enum class Violation { not_a_vertex, source_empty, not_an_edge, destination_occupied, disconnected };

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::not_a_vertex: return "destination outside the host graph";
    case Violation::source_empty: return "no robot at source";
    case Violation::not_an_edge: return "source and destination are not adjacent";
    case Violation::destination_occupied: return "destination occupied";
    case Violation::disconnected: return "result disconnected";
  }
  return "?";
}

class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(Violation v, const MoveAction& a)
      : std::runtime_error(std::string(to_string(v)) + ": " + swarmcomm::to_string(a)), violation_(v) {}
  Violation violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Thrown by algorithms handed a configuration outside their language.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns the violated constraint, or nullopt when `a` is legal for `c`.
inline std::optional<Violation> check_move(const GridGraph& g, const Configuration& c, const MoveAction& a) {
  if (is_stay(a)) return std::nullopt;
  const auto& mv = std::get<Move>(a);
  if (!g.contains(mv.to) || !g.contains(mv.from)) return Violation::not_a_vertex;
  if (!c.contains(mv.from)) return Violation::source_empty;
  if (!g.adjacent(mv.from, mv.to)) return Violation::not_an_edge;
  if (c.contains(mv.to)) return Violation::destination_occupied;
  if (!is_connected(g, c.moved(mv.from, mv.to).cells())) return Violation::disconnected;
  return std::nullopt;
}

/// C(u;v) for a Move, C for Stay. Throws IllegalMove naming the constraint.
inline Configuration apply(const GridGraph& g, const Configuration& c, const MoveAction& a) {
  if (auto v = check_move(g, c, a)) throw IllegalMove(*v, a);
  if (is_stay(a)) return c;
  const auto& mv = std::get<Move>(a);
  return c.moved(mv.from, mv.to);
}

/// A named oblivious algorithm: the next move is a function of the
/// configuration alone.
struct SwarmAlgorithm {
  std::string name;
  std::function<MoveAction(const Configuration&)> next;
  /// Shipped algorithms never stay mid-cycle; a Stay is flagged in the trace.
  bool shipped = false;

  MoveAction operator()(const Configuration& c) const { return next(c); }
};

struct BehaviorTrace {
  std::vector<Configuration> steps;
  /// moves[t] turns steps[t] into steps[t + 1].
  std::vector<MoveAction> moves;
  std::optional<std::size_t> delay;
  std::size_t move_count = 0;
  std::vector<std::string> warnings;

  bool reached() const { return delay.has_value(); }
  const Configuration& last() const { return steps.back(); }
};

class EngineAbort : public std::runtime_error {
 public:
  EngineAbort(const std::string& what, BehaviorTrace prefix)
      : std::runtime_error(what), prefix_(std::move(prefix)) {}
  const BehaviorTrace& prefix() const { return prefix_; }

 private:
  BehaviorTrace prefix_;
};

inline std::size_t default_max_steps(std::size_t k, std::size_t m) { return 12 * k * m; }

inline bool is_terminal(const GridGraph& g, const Configuration& c) {
  return g.touches_receiver(c.cells(), g.default_membership());
}

inline bool is_initial(const GridGraph& g, const Configuration& c) {
  return g.touches_sender(c.cells(), g.default_membership());
}

/// Simulates from `c0` until the first configuration touching the receiver
/// (delay = its index) or until `max_steps` moves have been applied.
inline BehaviorTrace run(const GridGraph& g, const SwarmAlgorithm& alg, const Configuration& c0,
                         std::size_t max_steps) {
  for (const auto& v : c0) g.require(v);
  if (!is_connected(g, c0.cells())) throw DomainError("initial configuration is not connected");
  if (!is_initial(g, c0)) throw DomainError("initial configuration does not touch the sender");

  BehaviorTrace trace;
  trace.steps.push_back(c0);
  for (std::size_t t = 0;; ++t) {
    const Configuration& current = trace.steps.back();
    if (is_terminal(g, current)) {
      trace.delay = t;
      break;
    }
    if (t == max_steps) break;
    MoveAction action;
    Configuration next;
    try {
      action = alg(current);
      next = apply(g, current, action);
    } catch (const std::exception& e) {
      throw EngineAbort(alg.name + " aborted at step " + std::to_string(t) + ": " + e.what(), trace);
    }
    if (is_stay(action)) {
      if (alg.shipped) trace.warnings.push_back(alg.name + " emitted Stay at step " + std::to_string(t));
    } else {
      ++trace.move_count;
    }
    trace.moves.push_back(action);
    trace.steps.push_back(std::move(next));
  }
  return trace;
}

inline BehaviorTrace run(const GridGraph& g, const SwarmAlgorithm& alg, const Configuration& c0) {
  return run(g, alg, c0, default_max_steps(c0.size(), static_cast<std::size_t>(g.columns())));
}

/// Re-checks every recorded step of a trace: zero or one robot moved along one
/// edge into an empty vertex, size constant, every configuration connected.
/// Returns the number of violating steps.
inline std::size_t count_violations(const GridGraph& g, const BehaviorTrace& trace) {
  std::size_t bad = 0;
  if (trace.steps.empty()) return 0;
  if (trace.moves.size() + 1 != trace.steps.size()) return 1;
  const std::size_t k = trace.steps.front().size();
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const auto& c = trace.steps[t];
    bool ok = c.size() == k && is_connected(g, c.cells());
    for (const auto& v : c) ok = ok && g.contains(v);
    if (t > 0) {
      const auto& prev = trace.steps[t - 1];
      ok = ok && !check_move(g, prev, trace.moves[t - 1]).has_value();
      if (ok) {
        // Independent diff: cells leaving and entering.
        std::vector<Vertex> gone, came;
        std::set_difference(prev.begin(), prev.end(), c.begin(), c.end(), std::back_inserter(gone));
        std::set_difference(c.begin(), c.end(), prev.begin(), prev.end(), std::back_inserter(came));
        if (is_stay(trace.moves[t - 1])) {
          ok = gone.empty() && came.empty();
        } else {
          const auto& mv = std::get<Move>(trace.moves[t - 1]);
          ok = gone.size() == 1 && came.size() == 1 && gone[0] == mv.from && came[0] == mv.to &&
               g.adjacent(gone[0], came[0]);
        }
      }
    }
    if (!ok) ++bad;
  }
  return bad;
}

/// Checks alg(c + dx) == alg(c) + dx. Both placements must stay strictly
/// inside the grid's columns (no contact with the first or last column).
inline bool check_equivariance(const GridGraph& g, const SwarmAlgorithm& alg, const Configuration& c, int dx) {
  auto inside = [&](const Configuration& cc) {
    for (const auto& v : cc)
      if (!g.contains(v) || v.x <= 0 || v.x >= g.columns() - 1) return false;
    return true;
  };
  Configuration shifted = c.translated(dx);
  if (!inside(c) || !inside(shifted)) throw DomainError("translated configuration leaves the grid interior");
  return alg(shifted) == translated(alg(c), dx);
}

}  // namespace swarmcomm
