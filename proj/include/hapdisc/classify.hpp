#pragma once

// Closed-form answers to "does S force discrepancy two?" for |S| <= 4.
//
// Sizes 1 and 2 never force. A set {a, b, c} with a, b < c forces exactly
// when a + b = c and a, b lie in different 2-classes. A reduced set of four
// forces exactly when one of four labelled conditions holds; each comes with
// an explicit odd cycle of length 3, 5, 5 or 7.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hapdisc/numeric.hpp"
#include "hapdisc/pattern.hpp"
#include "hapdisc/skipset.hpp"

namespace hapdisc {

enum class Rule {
  none,
  size3,           // a + b = c, different 2-classes: 3-cycle [+a +b -c]
  size4_bullet1,   // some 3-element subset satisfies the size-3 rule
  size4_bullet2,   // evens a, b in one class, b | a, a = 2b + y - x: [+b -a +b +y -x]
  size4_bullet3,   // a the only even, a = +-(2x - y - z): [-+a +x -y +x -z]
  size4_bullet4,   // {a, x, y, 1}, a = 2x + y - 3: [+a +1 -x +1 -y +1 -x]
};
std::string_view to_string(Rule r);

struct Classification {
  bool forces = false;
  Rule rule = Rule::none;
  /// Names in the rule's statement mapped to elements of the reduced set.
  std::vector<std::pair<std::string, std::int64_t>> labeling;
  /// Odd cycle over the original (unreduced) set.
  std::optional<SignedPattern> predicted_cycle;
  std::optional<Integer> cycle_start;
  /// Every size-4 rule that holds, in rule order.
  std::vector<Rule> satisfied;
  std::int64_t reduction_factor = 1;
};

class UnsupportedSizeError : public std::invalid_argument {
 public:
  explicit UnsupportedSizeError(std::size_t size);
};

/// Requires |S| = 3 and gcd(S) = 1 (std::invalid_argument otherwise).
Classification classify_size3(const SkipSet& s);
/// Requires |S| = 4 and gcd(S) = 1 (std::invalid_argument otherwise).
Classification classify_size4(const SkipSet& s);
/// Any S with 1 <= |S| <= 4; reduces first and rescales the cycle back.
/// Throws UnsupportedSizeError for |S| > 4.
Classification classify(const SkipSet& s);

}  // namespace hapdisc
