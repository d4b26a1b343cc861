#pragma once

// Codes built on the shipped algorithms: fixed-size codes (one swarm size,
// all codewords of one algorithm) and variable-size "tower" codes that fill
// levels of increasing swarm size with symbols in descending probability.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmcomm/alg_shift1x.hpp"
#include "swarmcomm/alg_shift2x.hpp"
#include "swarmcomm/configuration.hpp"
#include "swarmcomm/engine.hpp"
#include "swarmcomm/loco.hpp"

namespace swarmcomm {

using Bits = std::vector<int>;

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Memoryless source; probabilities stored in non-increasing order.
class SymbolSource {
 public:
  /// Validates without reordering.
  explicit SymbolSource(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw DomainError("source needs at least one symbol");
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (!(probs_[i] > 0.0) || probs_[i] > 1.0) throw DomainError("probability outside (0,1]");
      if (i > 0 && probs_[i] > probs_[i - 1]) throw DomainError("probabilities must be non-increasing");
      sum += probs_[i];
    }
    if (std::abs(sum - 1.0) > 1e-9) throw DomainError("probabilities sum to " + std::to_string(sum));
  }

  /// Normalizes and sorts descending; `reordered` reports whether sorting
  /// changed the order.
  static SymbolSource from_weights(std::vector<double> weights, bool* reordered = nullptr) {
    if (weights.empty()) throw DomainError("source needs at least one symbol");
    double sum = 0.0;
    for (double w : weights) {
      if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("weights must be positive and finite");
      sum += w;
    }
    for (double& w : weights) w /= sum;
    const bool sorted = std::is_sorted(weights.begin(), weights.end(), std::greater<>());
    if (reordered) *reordered = !sorted;
    std::stable_sort(weights.begin(), weights.end(), std::greater<>());
    return SymbolSource(std::move(weights));
  }

  static SymbolSource uniform(std::size_t alpha) { return from_weights(std::vector<double>(alpha, 1.0)); }

  /// p_i proportional to ratio^i.
  static SymbolSource geometric(std::size_t alpha, double ratio = 0.5) {
    std::vector<double> w;
    double p = 1.0;
    for (std::size_t i = 0; i < alpha; ++i, p *= ratio) w.push_back(p);
    return from_weights(std::move(w));
  }

  std::size_t alpha() const { return probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

/// Base-2 entropy; zero-probability terms contribute nothing.
inline double entropy(const SymbolSource& src) {
  double h = 0.0;
  for (double p : src.probs())
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

enum class Family { alg1, alg2 };
enum class Scheme { loco, alg1, alg2 };

inline const char* to_string(Family f) { return f == Family::alg1 ? "alg1" : "alg2"; }
inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::loco: return "loco";
    case Scheme::alg1: return "alg1";
    case Scheme::alg2: return "alg2";
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  if (name == "alg1") return Family::alg1;
  if (name == "alg2") return Family::alg2;
  throw DomainError("unknown algorithm '" + name + "' (expected alg1 or alg2)");
}

/// log2 of the number of codewords `family` offers at swarm size k, or -1 when
/// the family carries no bits at that size.
inline int capacity_log2(Family family, std::size_t k) {
  if (family == Family::alg1) return k >= alg1::kMinSwarm ? static_cast<int>(k - alg1::kControllerSize) : -1;
  return k >= 4 ? static_cast<int>(k / 2) : -1;
}

/// Number of codewords, saturating at 2^62.
inline std::uint64_t capacity(Family family, std::size_t k) {
  const int lg = capacity_log2(family, k);
  if (lg < 0) return 0;
  return lg >= 62 ? (std::uint64_t{1} << 62) : (std::uint64_t{1} << lg);
}

/// Sizes served by the single-codeword locomotion gait in tower codes.
inline std::size_t singleton_levels(Family family) { return family == Family::alg1 ? 14 : 3; }

/// `value` as a width-bit string, most significant bit first.
inline Bits to_bits(std::uint64_t value, std::size_t width) {
  Bits bits(width, 0);
  for (std::size_t i = 0; i < width && i < 64; ++i) bits[width - 1 - i] = static_cast<int>((value >> i) & 1u);
  return bits;
}

inline std::string bits_to_string(const Bits& bits) {
  std::string s;
  for (int b : bits) s += b ? '1' : '0';
  return s;
}

inline Bits parse_bits(const std::string& text) {
  Bits bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw DomainError("bit string may only contain 0 and 1: '" + text + "'");
    bits.push_back(ch - '0');
  }
  return bits;
}

struct CodeEntry {
  std::size_t symbol = 0;
  Scheme scheme = Scheme::loco;
  std::size_t k = 0;
  Bits bits;  // empty for locomotion singletons
  Configuration initial;
};

struct Code {
  Family family = Family::alg2;
  bool variable = false;
  std::vector<CodeEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::size_t max_k() const {
    std::size_t k = 0;
    for (const auto& e : entries) k = std::max(k, e.k);
    return k;
  }
  double average_size(const SymbolSource& src) const {
    double K = 0.0;
    for (const auto& e : entries) K += src[e.symbol] * static_cast<double>(e.k);
    return K;
  }
};

inline SwarmAlgorithm algorithm_for(Scheme s) {
  switch (s) {
    case Scheme::loco: return loco::algorithm();
    case Scheme::alg1: return alg1::algorithm();
    case Scheme::alg2: return alg2::algorithm();
  }
  throw DomainError("unknown scheme");
}

inline Configuration initial_configuration(Scheme s, std::size_t k, const Bits& bits) {
  switch (s) {
    case Scheme::loco: return loco::config(k, 0);
    case Scheme::alg1: return alg1::encode(bits, 0);
    case Scheme::alg2: return alg2::encode(bits, k, 0);
  }
  throw DomainError("unknown scheme");
}

inline CodeEntry make_entry(std::size_t symbol, Scheme scheme, std::size_t k, Bits bits) {
  CodeEntry e{symbol, scheme, k, std::move(bits), {}};
  e.initial = initial_configuration(scheme, k, e.bits);
  return e;
}

/// Symbols 0..alpha-1 take the first alpha bit strings in natural binary
/// order, all at swarm size k.
inline Code build_fixed_code(Family family, std::size_t k, std::size_t alpha) {
  const int lg = capacity_log2(family, k);
  if (lg < 0) {
    throw CapacityError(std::string(to_string(family)) + " carries no codewords at k = " + std::to_string(k) +
                        (family == Family::alg1 ? " (needs k >= 15)" : " (needs k >= 4)"));
  }
  if (alpha == 0) throw DomainError("alphabet must be non-empty");
  if (lg < 62 && alpha > capacity(family, k)) {
    throw CapacityError("alphabet of " + std::to_string(alpha) + " exceeds capacity 2^" + std::to_string(lg) + " = " +
                        std::to_string(capacity(family, k)) + " of " + to_string(family) + " at k = " +
                        std::to_string(k));
  }
  Code code;
  code.family = family;
  code.variable = false;
  const Scheme scheme = family == Family::alg1 ? Scheme::alg1 : Scheme::alg2;
  for (std::size_t i = 0; i < alpha; ++i)
    code.entries.push_back(make_entry(i, scheme, k, to_bits(i, static_cast<std::size_t>(lg))));
  return code;
}

/// Tower code: levels of increasing swarm size, each holding that size's
/// codewords (one locomotion singleton for the small sizes), filled with the
/// symbols in source order.
inline Code build_variable_code(Family family, const SymbolSource& src) {
  Code code;
  code.family = family;
  code.variable = true;
  const Scheme bit_scheme = family == Family::alg1 ? Scheme::alg1 : Scheme::alg2;
  std::size_t symbol = 0;
  for (std::size_t k = 1; symbol < src.alpha(); ++k) {
    if (k <= singleton_levels(family)) {
      code.entries.push_back(make_entry(symbol++, Scheme::loco, k, {}));
      continue;
    }
    const auto width = static_cast<std::size_t>(capacity_log2(family, k));
    const std::uint64_t level = capacity(family, k);
    for (std::uint64_t w = 0; w < level && symbol < src.alpha(); ++w)
      code.entries.push_back(make_entry(symbol++, bit_scheme, k, to_bits(w, width)));
  }
  return code;
}

struct TransmitResult {
  std::size_t sent = 0;
  std::optional<std::size_t> received;
  std::optional<std::size_t> delay;
  BehaviorTrace trace;
};

/// Receiver side: the swarm size selects the level, then the level's decoder
/// recovers the codeword.
inline std::optional<std::size_t> decode_symbol(const Code& code, const Configuration& terminal) {
  const std::size_t k = terminal.size();
  std::optional<Bits> bits;
  for (const auto& e : code.entries) {
    if (e.k != k) continue;
    if (e.scheme == Scheme::loco) return e.symbol;
    if (!bits) {
      try {
        bits = e.scheme == Scheme::alg1 ? alg1::decode_terminal(terminal, k) : alg2::decode_terminal(terminal, k);
      } catch (const ClassificationError&) {
        return std::nullopt;
      }
    }
    if (e.bits == *bits) return e.symbol;
  }
  return std::nullopt;
}

inline TransmitResult transmit(const GridGraph& g, const Code& code, std::size_t symbol,
                               std::optional<std::size_t> max_steps = std::nullopt) {
  if (symbol >= code.size()) throw DomainError("symbol index out of range");
  const CodeEntry& e = code.entries[symbol];
  for (const auto& v : e.initial) g.require(v);
  TransmitResult r;
  r.sent = symbol;
  const std::size_t limit = max_steps.value_or(default_max_steps(e.k, static_cast<std::size_t>(g.columns())));
  r.trace = run(g, algorithm_for(e.scheme), e.initial, limit);
  r.delay = r.trace.delay;
  if (r.delay) r.received = decode_symbol(code, r.trace.last());
  return r;
}

// Delay bounds on a strip with m columns.

inline double alg1_delay_bound(std::size_t k, std::size_t m) {
  return (10.0 * static_cast<double>(k) - 123.5) * (static_cast<double>(m) - static_cast<double>(k));
}
inline double alg2_delay(std::size_t k, std::size_t m) {
  return static_cast<double>(k) * (static_cast<double>(m) - static_cast<double>(k));
}
/// k(dist - 2(k-1)); dist is the sender/receiver distance.
inline double delay_lower_bound(std::size_t k, double dist) {
  return static_cast<double>(k) * (dist - 2.0 * (static_cast<double>(k) - 1.0));
}

/// One bound comparison: lhs <relation> rhs.
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  std::string relation;  // "<", "<=", ">=", "=="
  double rhs = 0.0;
  bool applicable = true;
  bool pass = true;
};

inline BoundCheck make_check(std::string name, double lhs, std::string relation, double rhs,
                             bool applicable = true) {
  BoundCheck c{std::move(name), lhs, std::move(relation), rhs, applicable, true};
  if (applicable) {
    if (c.relation == "<") c.pass = lhs < rhs;
    else if (c.relation == "<=") c.pass = lhs <= rhs;
    else if (c.relation == ">=") c.pass = lhs >= rhs;
    else if (c.relation == ">") c.pass = lhs > rhs;
    else c.pass = lhs == rhs;
  }
  return c;
}

struct SymbolRun {
  std::size_t symbol = 0;
  std::size_t k = 0;
  Scheme scheme = Scheme::loco;
  std::optional<std::size_t> received;
  std::optional<std::size_t> delay;
};

struct BoundReport {
  std::size_t m = 0;
  double entropy = 0.0;
  double K = 0.0;  // average swarm size
  double D = 0.0;  // average measured delay
  std::vector<SymbolRun> runs;
  std::vector<BoundCheck> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.applicable || c.pass; });
  }
};

/// Per-symbol algorithm upper bound on the delay from offset 0.
inline double symbol_delay_upper(Scheme s, std::size_t k, std::size_t m) {
  switch (s) {
    case Scheme::loco: return k == 1 ? static_cast<double>(m - 1) : alg2_delay(k, m) + static_cast<double>(k);
    case Scheme::alg1: return alg1_delay_bound(k, m);
    case Scheme::alg2: return alg2_delay(k, m) + static_cast<double>(k);
  }
  return 0.0;
}

/// Transmits every symbol over G_8(m,2) and checks the measured averages
/// against the bounds applicable to the code's family.
inline BoundReport bound_check(const Code& code, const SymbolSource& src, std::size_t m) {
  if (code.size() != src.alpha()) throw DomainError("code and source sizes differ");
  BoundReport rep;
  rep.m = m;
  rep.entropy = entropy(src);
  rep.K = code.average_size(src);
  const GridGraph g = GridGraph::eight_grid(static_cast<int>(m), 2);
  const double alpha = static_cast<double>(src.alpha());
  const double md = static_cast<double>(m);

  bool all_decoded = true;
  bool all_reached = true;
  for (const auto& e : code.entries) {
    const auto r = transmit(g, code, e.symbol);
    rep.runs.push_back({e.symbol, e.k, e.scheme, r.received, r.delay});
    all_reached = all_reached && r.delay.has_value();
    all_decoded = all_decoded && r.received == std::optional<std::size_t>(e.symbol);
    if (r.delay) rep.D += src[e.symbol] * static_cast<double>(*r.delay);
  }
  rep.checks.push_back(make_check("every symbol reaches the receiver", all_reached ? 1 : 0, "==", 1));
  rep.checks.push_back(make_check("every symbol decodes to itself", all_decoded ? 1 : 0, "==", 1));

  for (const auto& run : rep.runs) {
    if (!run.delay) continue;
    const double d = static_cast<double>(*run.delay);
    const std::string tag = "symbol " + std::to_string(run.symbol) + " (k=" + std::to_string(run.k) + ")";
    rep.checks.push_back(make_check(tag + " delay <= algorithm bound", d, "<=", symbol_delay_upper(run.scheme, run.k, m)));
    // Initial and terminal spans are disjoint when m >= 2k.
    rep.checks.push_back(make_check(tag + " delay >= k(dist - 2(k-1))", d, ">=", delay_lower_bound(run.k, md - 1.0),
                                    m >= 2 * run.k));
  }

  if (code.family == Family::alg2) {
    rep.checks.push_back(make_check("K < 2 H(S)", rep.K, "<", 2.0 * rep.entropy, src.alpha() > 1));
    rep.checks.push_back(make_check("D <= m K", rep.D, "<=", md * rep.K));
  } else {
    rep.checks.push_back(make_check("K < H(S) + 15", rep.K, "<", rep.entropy + 15.0));
    rep.checks.push_back(make_check("D <= 10 m K", rep.D, "<=", 10.0 * md * rep.K));
  }
  // D >= (m + 1 - 2 alpha) K holds for any code with m > 2 alpha and alpha >= every k_i.
  const bool lower_ok = md > 2.0 * alpha && static_cast<double>(code.max_k()) <= alpha;
  rep.checks.push_back(make_check("D >= (m + 1 - 2 alpha) K", rep.D, ">=", (md + 1.0 - 2.0 * alpha) * rep.K, lower_ok));
  return rep;
}

}  // namespace swarmcomm
