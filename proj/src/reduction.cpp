#include "hapdisc/reduction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace hapdisc {

EssInstance::EssInstance(std::vector<Integer> values) : a_(std::move(values)) {
  if (a_.empty()) throw std::invalid_argument("ESS instance must be nonempty");
  std::sort(a_.begin(), a_.end());
  if (a_.front() <= 0) throw std::invalid_argument("ESS elements must be positive");
  if (std::adjacent_find(a_.begin(), a_.end()) != a_.end())
    throw std::invalid_argument("ESS elements must be distinct");
}

void check_witness(const EssInstance& inst, const EssWitness& w) {
  const std::size_t n = inst.size();
  std::vector<int> seen(n, 0);
  Integer sx = 0, sy = 0;
  for (auto i : w.x) {
    if (i >= n || seen[i]++) throw std::invalid_argument("witness: bad or repeated index in X");
    sx += inst.values()[i];
  }
  for (auto i : w.y) {
    if (i >= n || seen[i]++) throw std::invalid_argument("witness: X and Y must be disjoint");
    sy += inst.values()[i];
  }
  if (w.x.size() != w.y.size() + 1) throw std::invalid_argument("witness: need |X| = |Y| + 1");
  if (sx != sy) throw std::invalid_argument("witness: sums differ");
}

namespace {

struct Half {
  std::int64_t sum = 0;
  int balance = 0;  // |X| - |Y|
};

// Digit d of the assignment for element k: 0 none, 1 X, 2 Y.
Half evaluate(std::uint64_t code, const std::vector<std::int64_t>& vals) {
  Half h;
  for (std::size_t k = vals.size(); k-- > 0;) {
    const auto d = code % 3;
    code /= 3;
    if (d == 1) {
      h.sum += vals[k];
      ++h.balance;
    } else if (d == 2) {
      h.sum -= vals[k];
      --h.balance;
    }
  }
  return h;
}

std::uint64_t pow3(std::size_t k) {
  std::uint64_t p = 1;
  while (k--) p *= 3;
  return p;
}

void decode(std::uint64_t code, std::size_t count, std::size_t base, EssWitness& w) {
  std::vector<std::size_t> x, y;
  for (std::size_t k = count; k-- > 0;) {
    const auto d = code % 3;
    code /= 3;
    if (d == 1) x.push_back(base + k);
    if (d == 2) y.push_back(base + k);
  }
  w.x.insert(w.x.end(), x.rbegin(), x.rend());
  w.y.insert(w.y.end(), y.rbegin(), y.rend());
}

}  // namespace

std::optional<EssWitness> ess_solve(const EssInstance& inst) {
  const std::size_t n = inst.size();
  if (n > kEssMaxSize)
    throw std::length_error("ess_solve: n = " + std::to_string(n) + " exceeds the brute-force budget of " +
                            std::to_string(kEssMaxSize));
  const Integer bound = std::numeric_limits<std::int64_t>::max() / static_cast<std::int64_t>(kEssMaxSize);
  std::vector<std::int64_t> vals;
  for (const auto& v : inst.values()) {
    if (v > bound) throw std::overflow_error("ess_solve: element too large");
    vals.push_back(static_cast<std::int64_t>(v));
  }

  const std::size_t h = n / 2;
  const std::vector<std::int64_t> left(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(h));
  const std::vector<std::int64_t> right(vals.begin() + static_cast<std::ptrdiff_t>(h), vals.end());

  // Lexicographically least right-half assignment for each (sum, balance).
  std::map<std::pair<std::int64_t, int>, std::uint64_t> first_right;
  const std::uint64_t right_count = pow3(right.size());
  for (std::uint64_t code = 0; code < right_count; ++code) {
    const Half r = evaluate(code, right);
    first_right.emplace(std::pair{r.sum, r.balance}, code);
  }

  const std::uint64_t left_count = pow3(left.size());
  for (std::uint64_t code = 0; code < left_count; ++code) {
    const Half l = evaluate(code, left);
    const auto it = first_right.find({-l.sum, 1 - l.balance});
    if (it == first_right.end()) continue;
    EssWitness w;
    decode(code, left.size(), 0, w);
    decode(it->second, right.size(), h, w);
    return w;
  }
  return std::nullopt;
}

std::vector<Integer> ReductionInstance::skips() const {
  std::vector<Integer> out = s;
  out.push_back(M);
  out.push_back(t);
  return out;
}

ReductionInstance build_d1_instance(const EssInstance& inst) {
  const auto& a = inst.values();
  const Integer n = static_cast<std::int64_t>(a.size());

  Integer M = n;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) M *= a[j] - a[i];
  for (const auto& ai : a) M *= n * ai + 1;

  // r = n * (floor(X / n) + 1) with X = (n/2)(n(a_n - a_1) + 1) + 1, kept in
  // halves so that odd n stays exact.
  const Integer twice_x = n * (n * (a.back() - a.front()) + 1) + 2;
  const Integer r = n * (twice_x / (2 * n) + 1);

  ReductionInstance ri{inst, M, r, (r - 1) * M + 1, {}};
  for (const auto& ai : a) ri.s.push_back(n * M * ai + r * M + 1);

  const auto all = ri.skips();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (gcd(all[i], all[j]) != 1)
        throw std::logic_error("reduction skips " + all[i].str() + " and " + all[j].str() +
                               " are not coprime");
  return ri;
}

namespace {

std::int64_t narrow(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("skip " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

SignedPattern witness_cycle(const ReductionInstance& ri, const EssWitness& w) {
  check_witness(ri.source, w);
  std::vector<Step> steps;
  for (std::size_t k = 0; k < w.x.size(); ++k) {
    steps.push_back({1, narrow(ri.s[w.x[k]])});
    if (k < w.y.size()) steps.push_back({-1, narrow(ri.s[w.y[k]])});
  }
  steps.push_back({-1, narrow(ri.t)});
  steps.push_back({-1, narrow(ri.M)});
  return SignedPattern(std::move(steps));
}

AuditRecord mod_nM_audit(const ReductionInstance& ri, const SignedPattern& sp) {
  AuditRecord rec;
  const Integer nM = static_cast<std::int64_t>(ri.source.size()) * ri.M;
  Integer residue = 0;
  int t_sign = 0, m_sign = 0;
  for (const Step& st : sp.steps()) {
    const Integer skip = st.skip;
    if (skip == ri.t) {
      ++rec.t_steps;
      t_sign = st.sign;
      residue += st.sign * (1 - ri.M);
    } else if (skip == ri.M) {
      ++rec.m_steps;
      m_sign = st.sign;
      residue += st.sign * ri.M;
    } else if (std::find(ri.s.begin(), ri.s.end(), skip) != ri.s.end()) {
      ++(st.sign > 0 ? rec.positive_s : rec.negative_s);
      residue += st.sign;
    } else {
      ++rec.foreign_steps;
    }
  }
  rec.residue_sum_zero = mod_floor(residue, nM) == 0;
  const auto net_s = static_cast<std::int64_t>(rec.positive_s) - static_cast<std::int64_t>(rec.negative_s);
  rec.passed = rec.foreign_steps == 0 && rec.t_steps == 1 && rec.m_steps == 1 && t_sign == m_sign &&
               net_s == -t_sign && rec.residue_sum_zero;
  return rec;
}

}  // namespace hapdisc
