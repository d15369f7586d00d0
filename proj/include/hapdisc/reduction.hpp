#pragma once

// Reduction from Equal Sum Subsets of Different by One Cardinality (ESS) to
// the discrepancy-one question.
//
// ESS: given distinct positive a_1 < ... < a_n, find disjoint X, Y with
// |X| = |Y| + 1 and equal sums. From A we build
//
//   M   = n * prod_{i<j} (a_j - a_i) * prod_i (n a_i + 1)
//   r   = least multiple of n strictly greater than (n/2)(n(a_n - a_1) + 1) + 1
//   s_i = n M a_i + r M + 1
//   t   = (r - 1) M + 1
//
// and the skip set {s_1, ..., s_n, M, t}. An ESS solution gives the odd
// cycle [+s_x1 -s_y1 + ... + s_x(k+1) -t -M], whose signed sum telescopes to 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hapdisc/numeric.hpp"
#include "hapdisc/pattern.hpp"

namespace hapdisc {

class EssInstance {
 public:
  /// Sorts; throws std::invalid_argument on an empty list, a non-positive
  /// element or a repeated element.
  explicit EssInstance(std::vector<Integer> values);

  const std::vector<Integer>& values() const { return a_; }
  std::size_t size() const { return a_.size(); }

 private:
  std::vector<Integer> a_;
};

/// X and Y as 0-based indices into the sorted instance, ascending.
struct EssWitness {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;

  friend bool operator==(const EssWitness&, const EssWitness&) = default;
};

/// Throws std::invalid_argument unless w is a valid solution of inst.
void check_witness(const EssInstance& inst, const EssWitness& w);

constexpr std::size_t kEssMaxSize = 24;

/// Exhaustive search. Assignments (element -> none, X, Y) are ordered
/// lexicographically with a_1 most significant and none < X < Y; returns the
/// first solution in that order. Throws std::length_error for n > 24.
std::optional<EssWitness> ess_solve(const EssInstance& inst);

struct ReductionInstance {
  EssInstance source;
  Integer M;
  Integer r;
  Integer t;
  std::vector<Integer> s;

  /// {s_1, ..., s_n, M, t} in that order.
  std::vector<Integer> skips() const;
};

/// Throws std::logic_error if the skips are not pairwise coprime.
ReductionInstance build_d1_instance(const EssInstance& inst);

/// Throws std::invalid_argument for an invalid witness and std::overflow_error
/// when a skip does not fit in 64 bits.
SignedPattern witness_cycle(const ReductionInstance& ri, const EssWitness& w);

struct AuditRecord {
  std::size_t t_steps = 0;
  std::size_t m_steps = 0;
  std::size_t positive_s = 0;
  std::size_t negative_s = 0;
  std::size_t foreign_steps = 0;  // skips outside the instance
  bool residue_sum_zero = false;  // sum of step residues mod nM
  bool passed = false;
};

/// Residue bookkeeping mod nM: s_i = 1, t = 1 - M, M = M. The only zero-sum
/// combination is one t-step and one M-step of the same sign e, with the
/// s-steps contributing -e net.
AuditRecord mod_nM_audit(const ReductionInstance& ri, const SignedPattern& sp);

}  // namespace hapdisc
