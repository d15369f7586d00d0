#pragma once

// Depth-first search for the longest realizable path and the longest odd
// cycle over a skip set.
//
// Children are tried with skips in descending order and + before -. The
// congruence system on the start term is merged one step at a time, so each
// node costs a single CRT merge; the final answer is re-checked with the full
// realizability test.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hapdisc/pattern.hpp"
#include "hapdisc/skipset.hpp"

namespace hapdisc {

enum class SearchKind { path, odd_cycle };
std::string_view to_string(SearchKind k);

struct SearchOptions {
  std::size_t max_len = 64;
  std::uint64_t node_limit = 0;  // 0: unlimited
  bool use_rules = true;         // suffix pruning with the forbidden-pattern rules
};

struct SearchResult {
  SearchKind kind = SearchKind::path;
  std::size_t length = 0;
  std::int64_t start = 0;  // least start with every term >= 0; for cycles the smallest term
  Pattern pattern;
  SignedPattern signed_pattern;
  bool lower_bound = false;  // the depth cap or node limit cut the search short
};

struct SearchOutcome {
  std::optional<SearchResult> best;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
};

/// Ties among maximum-length results go to the least start, then the sign
/// sequence (+ before -), then larger skips first.
SearchOutcome search_paths(const SkipSet& s, const SearchOptions& opts = {});
/// Cycles are reported from their smallest term, so the first step is +.
SearchOutcome search_odd_cycles(const SkipSet& s, const SearchOptions& opts = {});

SearchResult longest_path(const SkipSet& s, std::size_t max_len = 64);
std::optional<SearchResult> longest_odd_cycle(const SkipSet& s, std::size_t max_len = 64);

}  // namespace hapdisc
