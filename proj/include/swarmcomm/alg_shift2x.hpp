#pragma once

// Near-capacity shift on a two-row strip. A canonical swarm of k >= 15 robots
// holds one robot per column: k-14 codeword columns (row = bit) followed by a
// 14-robot controller
//
//   bf[0..3]  cp[0..4]  sign  cnt[0..3]
//
// which is all row 0 at rest. A cycle loads cp with the first five bits,
// opens a two-column wave (tail, head) at the left, and walks it through the
// codeword: the tail writes one bit per step from cp[0] while the controller
// shifts cp left and reloads cp[4] from the column past the head. Once the
// codeword is rewritten two columns to the right, the two wave robots stream
// through the controller (leaving row-0 robots behind) and close the swarm,
// giving the canonical state shifted by two columns.
//
// All positions are read off the configuration: the controller is anchored to
// the right end, the codeword to the left end, and the doubled columns mark the
// wave. `next` is therefore a pure function of the configuration.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "swarmcomm/configuration.hpp"
#include "swarmcomm/engine.hpp"

namespace swarmcomm::alg1 {

using Bits = std::vector<int>;

inline constexpr std::size_t kControllerSize = 14;
inline constexpr std::size_t kMinSwarm = kControllerSize + 1;

inline std::size_t codeword_length(std::size_t k) { return k - kControllerSize; }

enum class Phase {
  canonical,           // one robot per column, controller all zero
  cp_loading,          // one robot per column, cp being filled
  wave_init,           // a single doubled column relaying rightwards
  wave_in_code,        // tail/head pair still rewriting the codeword
  wave_in_controller,  // tail/head pair streaming through the controller
  reset_trail,         // last wave robot closing the right end
};

inline const char* to_string(Phase p) {
  switch (p) {
    case Phase::canonical: return "canonical";
    case Phase::cp_loading: return "cp-loading";
    case Phase::wave_init: return "wave-init";
    case Phase::wave_in_code: return "wave-in-code";
    case Phase::wave_in_controller: return "wave-in-controller";
    case Phase::reset_trail: return "reset-trail";
  }
  return "?";
}

/// Decoded view of a configuration in the algorithm's language.
struct State {
  Phase phase = Phase::canonical;
  ColumnProfile profile;
  std::size_t k = 0;
  int left = 0;   // leftmost occupied column
  int right = 0;  // rightmost occupied column
  int tail = -1;  // left doubled column (or the only one)
  int head = -1;  // right doubled column
  int sign = 0;
  int cnt = 0;  // number of ones in the unary counter
  std::array<int, 5> cp{};

  int code_length() const { return static_cast<int>(k - kControllerSize); }
  // Controller columns, anchored at the right end.
  int cnt_column(int i) const { return right - 3 + i; }
  int sign_column() const { return right - 4; }
  int cp_column(int i) const { return right - 9 + i; }
  int bf_column(int i) const { return right - 13 + i; }
  int row(int column) const { return profile.row_of_single(column); }
};

inline Configuration encode(const Bits& bits, int offset) {
  if (bits.empty()) throw DomainError("the shift-by-two algorithm needs at least one codeword bit (k >= 15)");
  if (offset < 0) throw DomainError("negative offset");
  std::vector<Vertex> cells;
  int x = offset;
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("bits must be 0 or 1");
    cells.push_back({x++, b});
  }
  for (std::size_t i = 0; i < kControllerSize; ++i) cells.push_back({x++, 0});
  return Configuration(std::move(cells));
}

inline Configuration encode(const Bits& bits, int offset, const GridGraph& g) {
  auto c = encode(bits, offset);
  for (const auto& v : c) g.require(v);
  return c;
}

namespace detail {

[[noreturn]] inline void reject(const std::string& why, const Configuration& c) {
  throw ClassificationError("shift-by-two: " + why + ": " + c.to_string());
}

inline void read_controller(State& s, const Configuration& c) {
  for (int i = 0; i < 5; ++i) s.cp[static_cast<std::size_t>(i)] = s.row(s.cp_column(i));
  s.sign = s.row(s.sign_column());
  std::array<int, 4> counter{};
  for (int i = 0; i < 4; ++i) counter[static_cast<std::size_t>(i)] = s.row(s.cnt_column(i));
  s.cnt = 0;
  while (s.cnt < 4 && counter[static_cast<std::size_t>(s.cnt)] == 1) ++s.cnt;
  for (int i = s.cnt; i < 4; ++i)
    if (counter[static_cast<std::size_t>(i)] != 0) reject("counter is not unary", c);
}

}  // namespace detail

inline State classify(const Configuration& c) {
  auto profile = strip_profile(c);
  if (!profile) detail::reject("not a contiguous two-row configuration", c);
  State s;
  s.profile = std::move(*profile);
  s.k = c.size();
  if (s.k < kMinSwarm) detail::reject("swarm smaller than 15 robots", c);
  s.left = s.profile.first;
  s.right = s.profile.last();
  const int k = static_cast<int>(s.k);
  const int code_len = s.code_length();
  const auto doubled = s.profile.doubled();

  switch (doubled.size()) {
    case 0: {
      detail::read_controller(s, c);
      for (int i = 0; i < 4; ++i)
        if (s.row(s.bf_column(i)) != 0) detail::reject("buffer not clear at rest", c);
      if (s.sign != 0 || s.cnt != 0) detail::reject("signal or counter set at rest", c);
      bool cp_clear = true;
      for (int b : s.cp) cp_clear = cp_clear && b == 0;
      s.phase = cp_clear ? Phase::canonical : Phase::cp_loading;
      return s;
    }
    case 1: {
      s.tail = doubled.front();
      const int pos = s.tail - s.left;
      if (pos <= 3) {
        s.phase = Phase::wave_init;
      } else if (pos >= k - 4 && pos <= k - 2) {
        s.phase = Phase::reset_trail;
      } else {
        detail::reject("doubled column at an unexpected position", c);
      }
      return s;
    }
    case 2: {
      s.tail = doubled[0];
      s.head = doubled[1];
      const int gap = s.head - s.tail;
      if (gap != 1 && gap != 2) detail::reject("wave columns too far apart", c);
      if (s.tail - s.left >= code_len) {
        s.phase = Phase::wave_in_controller;
        return s;
      }
      s.phase = Phase::wave_in_code;
      if (s.head >= s.cp_column(0)) detail::reject("wave overran the buffer", c);
      detail::read_controller(s, c);
      if (s.sign == 0 && s.cnt != 0) detail::reject("counter set while the signal is clear", c);
      return s;
    }
    default:
      detail::reject("more than two doubled columns", c);
  }
}

inline Phase phase(const Configuration& c) { return classify(c).phase; }

namespace detail {

inline Move flip(const State& s, int column) {
  const int r = s.row(column);
  return Move{{column, r}, {column, 1 - r}};
}

/// Robot in doubled column `from` at row `row` moves into the free cell of
/// column from + 1.
inline Move advance(const State& s, int from, int row) {
  return Move{{from, row}, {from + 1, 1 - s.row(from + 1)}};
}

}  // namespace detail

/// Single move of the shift-by-two algorithm.
inline MoveAction next(const Configuration& c) {
  const State s = classify(c);
  const int lo = s.left;

  switch (s.phase) {
    case Phase::canonical:
    case Phase::cp_loading: {
      for (int i = 0; i < 5; ++i) {
        if (s.cp[static_cast<std::size_t>(i)] != s.row(lo + i)) return detail::flip(s, s.cp_column(i));
      }
      // cp holds b1..b5: open the wave with the leftmost robot.
      return Move{{lo, s.row(lo)}, {lo + 1, 1 - s.row(lo + 1)}};
    }
    case Phase::wave_init: {
      const int pos = s.tail - lo;
      if (pos < 3) {
        // Relay the doubled column one step right (horizontal move).
        const int free_row = 1 - s.row(s.tail + 1);
        return Move{{s.tail, free_row}, {s.tail + 1, free_row}};
      }
      // Doubled column is two past the next one: the leftmost robot joins it.
      return Move{{lo, s.row(lo)}, {lo + 1, 1 - s.row(lo + 1)}};
    }
    case Phase::wave_in_code: {
      const int gap = s.head - s.tail;
      if (s.sign == 0) {
        if (gap == 2) {
          // Leave cp[0] behind in the tail; the other robot moves on.
          return detail::advance(s, s.tail, 1 - s.cp[0]);
        }
        return detail::flip(s, s.sign_column());
      }
      if (gap == 1) {
        if (s.cnt < 4) {
          const auto c_idx = static_cast<std::size_t>(s.cnt);
          if (s.cp[c_idx] != s.cp[c_idx + 1]) return detail::flip(s, s.cp_column(s.cnt));
          return detail::flip(s, s.cnt_column(s.cnt));
        }
        const int ahead = s.row(s.head + 1);
        if (s.cp[4] != ahead) return detail::flip(s, s.cp_column(4));
        return Move{{s.head, 1 - ahead}, {s.head + 1, 1 - ahead}};
      }
      if (s.cnt > 0) return detail::flip(s, s.cnt_column(s.cnt - 1));
      return detail::flip(s, s.sign_column());
    }
    case Phase::wave_in_controller: {
      const int gap = s.head - s.tail;
      if (gap == 1) {
        if (s.head < s.right) return detail::advance(s, s.head, 1);
        return Move{{s.head, 1}, {s.head + 1, 0}};
      }
      if (s.row(s.tail + 1) != 0) detail::reject("streaming tail expects a row-0 robot ahead", c);
      return Move{{s.tail, 1}, {s.tail + 1, 1}};
    }
    case Phase::reset_trail: {
      if (s.tail < s.right) {
        if (s.row(s.tail + 1) != 0) detail::reject("trailing robot expects a row-0 robot ahead", c);
        return Move{{s.tail, 1}, {s.tail + 1, 1}};
      }
      return Move{{s.tail, 1}, {s.tail + 1, 0}};
    }
  }
  detail::reject("unhandled phase", c);
}

inline SwarmAlgorithm algorithm() { return {"alg1", next, true}; }

inline bool is_canonical(const Configuration& c) {
  try {
    return classify(c).phase == Phase::canonical;
  } catch (const ClassificationError&) {
    return false;
  }
}

/// Codeword bits of a canonical configuration.
inline Bits read(const Configuration& c) {
  const State s = classify(c);
  if (s.phase != Phase::canonical) detail::reject("not canonical", c);
  Bits bits;
  for (int i = 0; i < s.code_length(); ++i) bits.push_back(s.row(s.left + i));
  return bits;
}

/// Runs the algorithm forward on a virtually widened strip until the next
/// canonical state and reads the codeword there.
inline Bits decode_terminal(const Configuration& c, std::size_t k) {
  if (c.size() != k) {
    throw ClassificationError("terminal holds " + std::to_string(c.size()) + " robots, expected " + std::to_string(k));
  }
  const GridGraph wide = GridGraph::eight_grid(c.max_x() + static_cast<int>(k) + 4, 2);
  Configuration cur = c;
  const std::size_t limit = 40 * k;
  for (std::size_t step = 0; step <= limit; ++step) {
    if (classify(cur).phase == Phase::canonical) return read(cur);
    cur = apply(wide, cur, next(cur));
  }
  detail::reject("no canonical state within one cycle", c);
}

}  // namespace swarmcomm::alg1
