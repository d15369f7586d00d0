#include "hapdisc/realizability.hpp"

#include <algorithm>
#include <stdexcept>

namespace hapdisc {

namespace {

// Parity requirement for end steps a (first) and b (last) when the
// intermediate sum is an even multiple of their gcd. The step in the higher
// 2-class is unconstrained.
bool parity_requirement(const Step& a, const Step& b) {
  const auto ca = TwoClass::of(a.skip);
  const auto cb = TwoClass::of(b.skip);
  if (ca < cb) return a.sign == -1;
  if (ca > cb) return b.sign == +1;
  return a.sign == -b.sign;
}

SubpathReport evaluate(const Step& a, const Step& b, std::int64_t intermediate, std::size_t i,
                       std::size_t j) {
  SubpathReport r;
  r.i = i;
  r.j = j;
  r.intermediate_sum = intermediate;
  r.gcd = gcd(a.skip, b.skip);
  r.divisibility_ok = intermediate % r.gcd == 0;
  if (r.divisibility_ok) {
    const bool even_multiple = (intermediate / r.gcd) % 2 == 0;
    r.parity_ok = even_multiple == parity_requirement(a, b);
  } else {
    r.parity_ok = false;
  }
  return r;
}

Failure failure_from(const SubpathReport& r) {
  return {r.i, r.j, r.divisibility_ok ? FailureReason::parity : FailureReason::divisibility};
}

RealizabilityVerdict forbidden_verdict(const SignedPattern& sp) {
  RealizabilityVerdict v;
  v.status = Status::forbidden;
  if (auto bad = first_failing_subpath(sp)) {
    v.failure = failure_from(*bad);
    v.subpath = *bad;
    return v;
  }
  // The subpath conditions and the congruence system agree; reaching this
  // point means an incompatibility the subpath scan did not see.
  const auto system = start_congruences(sp);
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t j = i + 1; j < system.size(); ++j)
      if (!crt_merge(system[i], system[j])) {
        v.failure = Failure{i, j, FailureReason::incompatible_congruences};
        return v;
      }
  v.failure = Failure{0, sp.size() - 1, FailureReason::incompatible_congruences};
  return v;
}

}  // namespace

SubpathReport check_subpath(const SignedPattern& sp, std::size_t i, std::size_t j) {
  if (!(i < j && j < sp.size())) throw std::out_of_range("check_subpath: need i < j < length");
  std::int64_t sum = 0;
  for (std::size_t k = i + 1; k < j; ++k) sum += sp[k].delta();
  return evaluate(sp[i], sp[j], sum, i, j);
}

std::optional<SubpathReport> first_failing_subpath(const SignedPattern& sp) {
  const auto off = sp.offsets();
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = i + 1; j < sp.size(); ++j) {
      // steps strictly between i and j span offsets i+1 .. j
      auto r = evaluate(sp[i], sp[j], off[j] - off[i + 1], i, j);
      if (!r.ok()) return r;
    }
  return std::nullopt;
}

bool adjacent_parity_ok(const Step& first, const Step& second) {
  return parity_requirement(first, second);
}

bool basic_parity_test(const SignedPattern& sp) {
  for (std::size_t k = 0; k + 1 < sp.size(); ++k)
    if (!adjacent_parity_ok(sp[k], sp[k + 1])) return false;
  return true;
}

std::vector<Congruence> start_congruences(const SignedPattern& sp) {
  std::vector<Congruence> system;
  system.reserve(sp.size());
  Integer before = 0;  // signed sum of the steps already taken
  for (const auto& st : sp.steps()) {
    const Integer skip = st.skip;
    const Integer base = st.sign > 0 ? Integer(0) : skip;
    system.emplace_back(base - before, 2 * skip);
    before += st.delta();
  }
  return system;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::forbidden: return "forbidden";
    case Status::weakly_realizable: return "weakly-realizable";
    case Status::realizable: return "realizable";
  }
  return "?";
}

std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::divisibility: return "divisibility";
    case FailureReason::parity: return "parity";
    case FailureReason::incompatible_congruences: return "incompatible-congruences";
    case FailureReason::repeated_term: return "repeated-term";
    case FailureReason::repeated_arc: return "repeated-arc";
    case FailureReason::even_length: return "even-length";
    case FailureReason::nonzero_sum: return "nonzero-sum";
    case FailureReason::closed_path: return "closed-path";
  }
  return "?";
}

Integer least_valid_start(const Congruence& solutions, const SignedPattern& sp) {
  const auto off = sp.offsets();
  const Integer lowest = -Integer(*std::min_element(off.begin(), off.end()));
  Integer start = solutions.residue;
  if (start < lowest) {
    const Integer gap = lowest - start;
    start += ((gap + solutions.modulus - 1) / solutions.modulus) * solutions.modulus;
  }
  return start;
}

RealizabilityVerdict weakly_realizable(const SignedPattern& sp) {
  const auto system = start_congruences(sp);
  const auto solution = crt_solve(system);
  if (!solution) return forbidden_verdict(sp);
  RealizabilityVerdict v;
  v.status = Status::weakly_realizable;
  v.witness_start = least_valid_start(*solution, sp);
  return v;
}

RealizabilityVerdict strict_realizability(const SignedPattern& sp, WalkKind kind) {
  auto v = weakly_realizable(sp);
  if (!v.weakly()) return v;
  const WalkShape shape = walk_shape(sp);
  const std::size_t last = sp.size() - 1;
  if (shape.repeated_arc) {
    v.failure = Failure{0, last, FailureReason::repeated_arc};
  } else if (shape.repeated_term) {
    v.failure = Failure{0, last, FailureReason::repeated_term};
  } else if (shape.closed && kind == WalkKind::path) {
    v.failure = Failure{0, last, FailureReason::closed_path};
  } else {
    v.status = Status::realizable;
  }
  return v;
}

std::vector<SignedPattern> bpt_signings(const Pattern& p) {
  std::vector<SignedPattern> out;
  std::vector<Step> steps(p.size());
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == p.size()) {
      out.emplace_back(steps);
      return;
    }
    for (int sign : {+1, -1}) {
      steps[k] = {sign, p[k]};
      if (k > 0 && !adjacent_parity_ok(steps[k - 1], steps[k])) continue;
      self(self, k + 1);
    }
  };
  extend(extend, 0);
  return out;
}

namespace {

UnsignedVerdict best_signing(const Pattern& p, bool strict, WalkKind kind) {
  UnsignedVerdict best;
  const auto signings = bpt_signings(p);
  for (const auto& sp : signings) {
    auto v = strict ? strict_realizability(sp, kind) : weakly_realizable(sp);
    if (!best.signing || v.status > best.verdict.status) {
      best.verdict = v;
      best.signing = sp;
    }
    if (v.status == (strict ? Status::realizable : Status::weakly_realizable)) break;
  }
  if (!best.signing) {
    // No signing passes the basic parity test: report the first adjacent
    // pair that rules out both signs of its second step.
    best.verdict.status = Status::forbidden;
    std::size_t k = 0;
    for (; k + 1 < p.size(); ++k) {
      Pattern prefix(std::vector<std::int64_t>(p.skips().begin(), p.skips().begin() + k + 2));
      if (bpt_signings(prefix).empty()) break;
    }
    best.verdict.failure = Failure{k, k + 1, FailureReason::parity};
  }
  return best;
}

}  // namespace

UnsignedVerdict weakly_realizable(const Pattern& p) { return best_signing(p, false, WalkKind::path); }

UnsignedVerdict strict_realizability(const Pattern& p, WalkKind kind) {
  return best_signing(p, true, kind);
}

CycleVerdict valid_odd_cycle(const SignedPattern& sp) {
  CycleVerdict cv;
  cv.signed_sum = sp.signed_sum();
  const std::size_t last = sp.size() - 1;
  if (sp.size() % 2 == 0) {
    cv.failure = Failure{0, last, FailureReason::even_length};
    return cv;
  }
  if (cv.signed_sum != 0) {
    cv.failure = Failure{0, last, FailureReason::nonzero_sum};
    return cv;
  }
  const auto v = strict_realizability(sp, WalkKind::cycle);
  cv.witness_start = v.witness_start;
  cv.failure = v.failure;
  cv.valid = v.strict();
  return cv;
}

bool both_paths_agree(const SignedPattern& sp, std::size_t i, std::size_t j) {
  if (sp.signed_sum() != 0) throw std::invalid_argument("both_paths_agree: signed sum is not zero");
  if (!(i < j && j < sp.size())) throw std::out_of_range("both_paths_agree: need i < j < length");
  const auto direct = check_subpath(sp, i, j);
  const SignedPattern around = sp.rotated(j);
  const std::size_t i_rotated = i + sp.size() - j;
  const auto complement = check_subpath(around, 0, i_rotated);
  if (direct.divisibility_ok != complement.divisibility_ok) return false;
  return !direct.divisibility_ok || direct.parity_ok == complement.parity_ok;
}

}  // namespace hapdisc
