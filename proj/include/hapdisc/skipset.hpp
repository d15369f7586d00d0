#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hapdisc/numeric.hpp"

namespace hapdisc {

/// A finite set of distinct positive skip sizes, kept sorted ascending.
class SkipSet {
 public:
  SkipSet() = default;
  /// Sorts and deduplicates; throws std::invalid_argument on a nonpositive element.
  explicit SkipSet(std::vector<std::int64_t> elements);
  SkipSet(std::initializer_list<std::int64_t> elements)
      : SkipSet(std::vector<std::int64_t>(elements)) {}

  /// Parses "1,2,3" (whitespace tolerated).
  static SkipSet parse(std::string_view text);

  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::int64_t s) const;
  std::int64_t max() const { return elements_.back(); }
  std::int64_t operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::int64_t gcd() const;
  bool is_reduced() const { return gcd() == 1; }
  Integer lcm() const;

  std::string to_string() const;  // "{1,2,3}"

  friend bool operator==(const SkipSet&, const SkipSet&) = default;
  friend auto operator<=>(const SkipSet&, const SkipSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

/// Divides every element by the gcd. Returns the reduced set and the factor.
std::pair<SkipSet, std::int64_t> reduce_set(const SkipSet& s);

}  // namespace hapdisc
