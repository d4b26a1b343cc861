#pragma once

// Delay-optimal shift on a two-row strip. The codeword B (ell = floor(k/2)
// bits) is stored twice, B·B, one robot per column (row = bit); odd swarms
// carry one extra row-0 robot at the right. A single doubled column (the
// wave) sweeps left to right and shifts every column by one, k moves per
// cycle.

#include <cstddef>
#include <string>
#include <vector>

#include "swarmcomm/configuration.hpp"
#include "swarmcomm/engine.hpp"

namespace swarmcomm::alg2 {

using Bits = std::vector<int>;

inline std::size_t codeword_length(std::size_t k) { return k / 2; }

inline std::size_t capacity_log2(std::size_t k) { return k / 2; }

/// Row pattern of the canonical state: B·B, then a 0 for odd k.
inline Bits occupancy_word(const Bits& bits, std::size_t k) {
  Bits word = bits;
  word.insert(word.end(), bits.begin(), bits.end());
  if (k % 2 == 1) word.push_back(0);
  return word;
}

inline Configuration encode(const Bits& bits, std::size_t k, int offset) {
  if (k < 4) throw DomainError("shift-by-one needs k >= 4 (ell >= 2), got k = " + std::to_string(k));
  if (bits.size() != codeword_length(k))
    throw DomainError("codeword length " + std::to_string(bits.size()) + " does not match floor(k/2) = " +
                      std::to_string(codeword_length(k)));
  if (offset < 0) throw DomainError("negative offset");
  std::vector<Vertex> cells;
  int x = offset;
  for (int b : occupancy_word(bits, k)) {
    if (b != 0 && b != 1) throw DomainError("bits must be 0 or 1");
    cells.push_back({x++, b});
  }
  return Configuration(std::move(cells));
}

inline Configuration encode(const Bits& bits, std::size_t k, int offset, const GridGraph& g) {
  auto c = encode(bits, k, offset);
  for (const auto& v : c) g.require(v);
  return c;
}

namespace detail {

struct Shape {
  ColumnProfile profile;
  std::size_t k = 0;
  std::size_t ell = 0;
  int wave = -1;  // absolute column of the doubled column, -1 when canonical
};

inline Shape classify(const Configuration& c) {
  auto profile = strip_profile(c);
  if (!profile) throw ClassificationError("not a contiguous two-row configuration: " + c.to_string());
  Shape s{*profile, c.size(), c.size() / 2, -1};
  if (s.k < 4) throw ClassificationError("swarm too small for the shift-by-one algorithm");
  auto doubled = s.profile.doubled();
  if (doubled.size() > 1) throw ClassificationError("more than one doubled column: " + c.to_string());
  if (!doubled.empty()) s.wave = doubled.front();
  return s;
}

}  // namespace detail

/// Single move of the shift-by-one algorithm.
inline MoveAction next(const Configuration& c) {
  const auto s = detail::classify(c);
  const auto& p = s.profile;
  const int lo = p.first;
  const int ell = static_cast<int>(s.ell);

  if (s.wave < 0) {
    // Canonical: the leftmost robot steps into the free cell of the next column.
    const int r = p.row_of_single(lo + 1);
    return Move{{lo, p.row_of_single(lo)}, {lo + 1, 1 - r}};
  }

  const int a = s.wave;
  const int j = a - lo + 1;  // 1-based column of the wave inside the swarm
  // The bit left behind at swarm column j is (B·B)[j-1]: still untouched in
  // the copy at a + ell - 1 while j <= ell, already finalized at a - ell after.
  int keep = 0;
  if (j <= ell) {
    keep = p.row_of_single(a + ell - 1);
  } else {
    keep = p.row_of_single(a - ell);
  }
  const Vertex mover{a, 1 - keep};
  if (a < p.last()) {
    return Move{mover, {a + 1, 1 - p.row_of_single(a + 1)}};
  }
  // Wave at the right end: the mover opens the new rightmost column. Its row is
  // the last word bit: b_ell (read from the finalized code) or 0 for odd k.
  int tail_row = 0;
  if (s.k % 2 == 0) tail_row = p.row_of_single(lo + ell - 1);
  return Move{mover, {a + 1, tail_row}};
}

inline SwarmAlgorithm algorithm() { return {"alg2", next, true}; }

inline bool is_canonical(const Configuration& c) {
  auto profile = strip_profile(c);
  return profile && profile->doubled().empty() && c.size() >= 4;
}

/// Reads B from a canonical state; the code and copy halves must agree.
inline Bits read(const Configuration& c) {
  auto profile = strip_profile(c);
  if (!profile || !profile->doubled().empty() || c.size() < 4)
    throw ClassificationError("not a canonical shift-by-one state: " + c.to_string());
  const std::size_t k = c.size();
  const std::size_t ell = k / 2;
  Bits bits;
  for (std::size_t i = 0; i < ell; ++i) {
    const int x = profile->first + static_cast<int>(i);
    const int code = profile->row_of_single(x);
    const int copy = profile->row_of_single(x + static_cast<int>(ell));
    if (code != copy) throw ClassificationError("code and copy disagree at bit " + std::to_string(i));
    bits.push_back(code);
  }
  if (k % 2 == 1 && profile->row_of_single(profile->last()) != 0)
    throw ClassificationError("odd swarm must end with a row-0 robot");
  return bits;
}

/// Recovers B from any configuration of the cycle (canonical or mid-wave).
inline Bits decode_terminal(const Configuration& c, std::size_t k) {
  if (c.size() != k) throw ClassificationError("terminal holds " + std::to_string(c.size()) + " robots, expected " +
                                               std::to_string(k));
  const auto s = detail::classify(c);
  if (s.wave < 0) return read(c);
  const auto& p = s.profile;
  const int lo = p.first;
  const int j = s.wave - lo + 1;
  const std::size_t ell = s.ell;
  // Swarm column i (1-based) holds word[i-1] when i < j and word[i] when i > j.
  Bits bits(ell, 0);
  for (std::size_t i = 0; i < ell; ++i) {
    const int idx = static_cast<int>(i);  // word index
    if (idx + 1 < j) {
      bits[i] = p.row_of_single(lo + idx);
    } else {
      const int copy_idx = idx + static_cast<int>(ell);  // word index in the copy half
      const int col = copy_idx;                            // 1-based swarm column holding word[col]
      if (col <= j) throw ClassificationError("wave position leaves bit " + std::to_string(i) + " unrecoverable");
      bits[i] = p.row_of_single(lo + col - 1);
    }
  }
  return bits;
}

}  // namespace swarmcomm::alg2
