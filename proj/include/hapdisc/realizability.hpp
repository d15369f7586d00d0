#pragma once

// Decides whether a skip pattern can be traced in a skip graph.
//
// A signed pattern is weakly realizable when some start term T makes every
// step leave from the right kind of multiple: an even multiple of the skip
// for a + step, an odd multiple for a - step. That is a system of
// congruences on T, one per step, solvable exactly when every subpath
// satisfies the Divisibility and Parity conditions checked by
// check_subpath(). Realizable additionally means no term or arc repeats.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hapdisc/numeric.hpp"
#include "hapdisc/pattern.hpp"

namespace hapdisc {

/// Divisibility/Parity data for the subpath from step i to step j.
struct SubpathReport {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t intermediate_sum = 0;  // signed sum of the steps strictly between i and j
  std::int64_t gcd = 1;               // gcd of the two end skips
  bool divisibility_ok = true;
  bool parity_ok = true;  // false whenever divisibility fails

  bool ok() const { return divisibility_ok && parity_ok; }
};

/// Throws std::out_of_range unless i < j < sp.size().
SubpathReport check_subpath(const SignedPattern& sp, std::size_t i, std::size_t j);

/// Lexicographically first (i, j) violating Divisibility or Parity.
std::optional<SubpathReport> first_failing_subpath(const SignedPattern& sp);

/// Parity condition for two consecutive steps.
bool adjacent_parity_ok(const Step& first, const Step& second);

/// Parity condition on every adjacent pair of steps.
bool basic_parity_test(const SignedPattern& sp);

/// One congruence per step constraining the start term T.
std::vector<Congruence> start_congruences(const SignedPattern& sp);

enum class Status { forbidden, weakly_realizable, realizable };
std::string_view to_string(Status s);

enum class FailureReason {
  divisibility,
  parity,
  incompatible_congruences,
  repeated_term,
  repeated_arc,
  even_length,
  nonzero_sum,
  closed_path,
};
std::string_view to_string(FailureReason r);

struct Failure {
  std::size_t i = 0;
  std::size_t j = 0;
  FailureReason reason = FailureReason::divisibility;
};

struct RealizabilityVerdict {
  Status status = Status::forbidden;
  std::optional<Integer> witness_start;  // present iff status != forbidden
  std::optional<Failure> failure;
  std::optional<SubpathReport> subpath;  // the failing subpath, when that is the cause

  bool weakly() const { return status != Status::forbidden; }
  bool strict() const { return status == Status::realizable; }
};

enum class WalkKind { path, cycle };

/// Least start term in `solutions` for which every term of the walk is >= 0.
Integer least_valid_start(const Congruence& solutions, const SignedPattern& sp);

RealizabilityVerdict weakly_realizable(const SignedPattern& sp);

/// Upgrades a weak verdict to realizable when the walk repeats no term or
/// arc. For WalkKind::cycle the closing coincidence first == last is allowed;
/// for WalkKind::path it counts as a repeated term.
RealizabilityVerdict strict_realizability(const SignedPattern& sp, WalkKind kind = WalkKind::path);

/// Verdict for an unsigned pattern: the first sign assignment (+ before -,
/// left to right) achieving the best status.
struct UnsignedVerdict {
  RealizabilityVerdict verdict;
  std::optional<SignedPattern> signing;  // the signing the verdict refers to
};

UnsignedVerdict weakly_realizable(const Pattern& p);
UnsignedVerdict strict_realizability(const Pattern& p, WalkKind kind = WalkKind::path);

/// Sign assignments of `p` that pass the basic parity test, in + before - order.
std::vector<SignedPattern> bpt_signings(const Pattern& p);

struct CycleVerdict {
  bool valid = false;
  std::int64_t signed_sum = 0;
  std::optional<Integer> witness_start;
  std::optional<Failure> failure;
};

/// Odd length, zero signed sum, weakly realizable, and the closed walk
/// repeats no term other than first == last and no arc.
CycleVerdict valid_odd_cycle(const SignedPattern& sp);

/// Compares the Divisibility/Parity verdict of the subpath i..j with that of
/// the complementary path j..i around the cycle. Throws std::invalid_argument
/// when the signed sum is nonzero.
bool both_paths_agree(const SignedPattern& sp, std::size_t i, std::size_t j);

}  // namespace hapdisc
