#pragma once

// Bracket-notation skip patterns such as "[2 1 3]" (unsigned) and
// "[+2 +1 -3]" (signed), and their realization as walks on the number line.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hapdisc {

/// A pattern of skip sizes without directions.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<std::int64_t> skips);

  const std::vector<std::int64_t>& skips() const { return skips_; }
  std::size_t size() const { return skips_.size(); }
  std::int64_t operator[](std::size_t i) const { return skips_[i]; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<std::int64_t> skips_;
};

struct Step {
  int sign = 1;  // +1 leaves from an even multiple, -1 from an odd multiple
  std::int64_t skip = 1;

  std::int64_t delta() const { return sign * skip; }

  friend bool operator==(const Step&, const Step&) = default;
};

/// A pattern of skips with directions.
class SignedPattern {
 public:
  SignedPattern() = default;
  explicit SignedPattern(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  const Step& operator[](std::size_t i) const { return steps_[i]; }

  Pattern unsigned_pattern() const;
  std::int64_t signed_sum() const;
  /// Terms relative to the start: offsets[0] = 0, offsets[k+1] = offsets[k] + delta_k.
  std::vector<std::int64_t> offsets() const;
  /// The same walk traced backwards.
  SignedPattern reversed() const;
  /// Steps rotated so that step `first` comes first.
  SignedPattern rotated(std::size_t first) const;
  SignedPattern scaled(std::int64_t factor) const;

  friend bool operator==(const SignedPattern&, const SignedPattern&) = default;

 private:
  std::vector<Step> steps_;
};

using AnyPattern = std::variant<Pattern, SignedPattern>;

class PatternParseError : public std::invalid_argument {
 public:
  PatternParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `'[' (sign? uint)+ ']'`. Signs must be present on every step or on
/// none. Accepts '-' and U+2212 for minus.
AnyPattern parse_pattern(std::string_view text);
Pattern parse_unsigned_pattern(std::string_view text);
SignedPattern parse_signed_pattern(std::string_view text);

/// Canonical text: "[2 1 3]" or "[+2 +1 -3]".
std::string format_pattern(const Pattern& p);
std::string format_pattern(const SignedPattern& sp);
std::string format_pattern(const AnyPattern& p);

class SignInferenceError : public std::invalid_argument {
 public:
  SignInferenceError(std::size_t index, std::int64_t term, std::int64_t skip);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Signs each step + or - according to whether the current term is an even
/// or an odd multiple of the next skip.
SignedPattern infer_signs(const Pattern& p, std::int64_t start);

/// Unordered endpoint pair; stored with first < second.
struct Arc {
  std::int64_t first = 0;
  std::int64_t second = 0;

  static Arc between(std::int64_t a, std::int64_t b) { return a < b ? Arc{a, b} : Arc{b, a}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Repetition structure of a walk. Depends only on the step differences, so
/// it is the same for every start term.
struct WalkShape {
  bool closed = false;         // first term == last term
  bool repeated_term = false;  // ignoring the closing coincidence
  bool repeated_arc = false;

  bool simple_path() const { return !closed && !repeated_term && !repeated_arc; }
  bool simple_cycle() const { return closed && !repeated_term && !repeated_arc; }
};

WalkShape walk_shape(const SignedPattern& sp);

struct Realization {
  std::int64_t start = 0;
  SignedPattern pattern;
  std::vector<std::int64_t> terms;
  std::vector<Arc> arcs;
  std::optional<std::size_t> parity_violation;  // first step leaving from the wrong multiple
  WalkShape shape;

  bool valid_walk() const { return !parity_violation.has_value(); }
};

class NegativeTermError : public std::invalid_argument {
 public:
  explicit NegativeTermError(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Walks `sp` from `start`. Parity violations and repetitions are recorded in
/// the result; leaving the natural numbers throws NegativeTermError.
Realization realize(const SignedPattern& sp, std::int64_t start);

}  // namespace hapdisc
