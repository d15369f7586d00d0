#pragma once

// Necessary conditions for a pattern to be realizable. Each rule names a
// shape that can never be traced without repeating a term or an arc. A
// pattern that passes every rule may still be forbidden.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "hapdisc/pattern.hpp"

namespace hapdisc {

enum class RuleId {
  AA,          // [a a]
  ABAB,        // [a b a b], a != b
  ABA_DIV,     // [a b a] with a not dividing b
  ODD_BLOCKS,  // odd-length run of odd skips between two even skips
  GCD_SPAN,    // [a x1 .. xk b]: gcd(a, b) divides no signed sum of the x's
  PLUS_PLUS,   // [+a +b] or [-b -a] needs a in a strictly higher 2-class than b
  CLASS_SIGN,  // any other adjacent sign/2-class conflict; for unsigned
               // patterns, no signing passes the adjacent parity test
  ABCA,        // [a b c a] with a > b and a > c
  AABBCC,      // a permutation of three pairs
  NO_PAIRS,    // a permutation of one, two or three pairs
  BACABAC,     // [b a c a b a c]
};

std::string_view to_string(RuleId id);

struct RuleVerdict {
  bool forbidden = false;
  std::optional<RuleId> rule;
  std::size_t first = 0;  // offending index range [first, last]
  std::size_t last = 0;
};

/// First violated rule, trying rules in the order listed in RuleId and, for
/// each rule, windows from left to right.
RuleVerdict rule_scan(const Pattern& p);
RuleVerdict rule_scan(const SignedPattern& sp);

/// Structural rules (AA, ABAB, ABA-div, ABCA, AABBCC, NO-PAIRS, BACABAC)
/// restricted to windows ending at the last skip. Used to prune searches
/// that extend a pattern one skip at a time.
std::optional<RuleId> suffix_violation(std::span<const std::int64_t> skips);

}  // namespace hapdisc
