#pragma once

// The skip graph G(S): vertices are the natural numbers, and each skip s
// contributes an edge from every even multiple 2ms to the next odd multiple
// (2m+1)s. The graph repeats with period 2*lcm(S), and no edge crosses a
// period boundary, so one block [0, period) carries all the structure.
//
// A discrepancy-1 colouring for S is exactly a proper 2-colouring of G(S);
// an odd cycle certifies that S forces discrepancy two.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hapdisc/numeric.hpp"
#include "hapdisc/pattern.hpp"
#include "hapdisc/skipset.hpp"

namespace hapdisc {

inline constexpr std::int64_t kDefaultMaxPeriod = std::int64_t{1} << 24;

class PeriodCapError : public std::runtime_error {
 public:
  PeriodCapError(Integer period, std::int64_t cap);
  const Integer& period() const { return period_; }

 private:
  Integer period_;
};

class SkipGraph {
 public:
  const SkipSet& skip_set() const { return skips_; }
  std::int64_t lcm() const { return lcm_; }
  std::int64_t period() const { return 2 * lcm_; }

  /// Neighbours of v in G(S); v is reduced modulo the period first.
  /// Each entry is the neighbour vertex; the arc's skip is |v - neighbour|.
  template <typename F>
  void for_each_neighbor(std::int64_t v, F&& f) const {
    for (auto s : skips_) {
      if (v % s != 0) continue;
      f((v / s) % 2 == 0 ? v + s : v - s);
    }
  }

  std::vector<std::int64_t> neighbors(std::int64_t v) const;
  bool has_edge(std::int64_t u, std::int64_t v) const;
  /// Number of s-arcs inside one period block: lcm(S)/s.
  std::int64_t edge_count(std::int64_t s) const { return lcm_ / s; }

 private:
  friend SkipGraph build_graph(const SkipSet& s, std::int64_t cap);
  SkipGraph(SkipSet s, std::int64_t lcm) : skips_(std::move(s)), lcm_(lcm) {}

  SkipSet skips_;
  std::int64_t lcm_ = 1;
};

/// Throws PeriodCapError when 2*lcm(S) exceeds `cap`, and
/// std::invalid_argument for an empty set.
SkipGraph build_graph(const SkipSet& s, std::int64_t cap = kDefaultMaxPeriod);

/// +1/-1 per vertex of one period block, extended periodically.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<std::int8_t> colors);

  std::int64_t period() const { return static_cast<std::int64_t>(colors_.size()); }
  int at(std::int64_t v) const;  // periodic extension
  const std::vector<std::int8_t>& colors() const { return colors_; }

  /// Whitespace-separated "+1"/"-1" tokens, one per vertex of the block.
  std::string to_text() const;
  static Coloring parse(std::string_view text);

  /// The colouring in the indexing of the original sequence: entry n-1 is
  /// x_n for n in [1, period], using x_n = colour(period - n).
  std::vector<std::int8_t> erdos_sequence() const;

 private:
  std::vector<std::int8_t> colors_;
};

/// Breadth-first 2-colouring; component roots and isolated vertices get +1.
std::optional<Coloring> two_color(const SkipGraph& g);

struct OddCycleCertificate {
  SignedPattern pattern;
  std::int64_t start = 0;
};

/// An odd cycle from a BFS conflict edge and the two tree paths, rotated to
/// start at its smallest vertex. nullopt iff the graph is bipartite.
std::optional<OddCycleCertificate> find_odd_cycle(const SkipGraph& g);

/// Largest |d(s, k)| = |x_s + x_2s + ... + x_ks| over s in S and ks <= horizon,
/// where x_n = c.at(period - n) mirrors the graph block onto [1, period].
/// Throws std::invalid_argument when horizon < max(S).
std::int64_t verify_discrepancy(const Coloring& c, const SkipSet& s, std::int64_t horizon);

/// Rotates a closed walk to begin at its smallest term and picks the
/// traversal direction whose sign sequence is lexicographically least
/// (+ before -), then whose skips are largest first. `start` is the term the
/// given walk begins at; the returned start is the smallest term.
OddCycleCertificate canonical_cycle(const SignedPattern& cycle, std::int64_t start);

}  // namespace hapdisc
