#include "hapdisc/rules.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "hapdisc/numeric.hpp"
#include "hapdisc/realizability.hpp"

namespace hapdisc {

std::string_view to_string(RuleId id) {
  switch (id) {
    case RuleId::AA: return "AA";
    case RuleId::ABAB: return "ABAB";
    case RuleId::ABA_DIV: return "ABA-div";
    case RuleId::GCD_SPAN: return "GCD-span";
    case RuleId::PLUS_PLUS: return "PLUS-PLUS";
    case RuleId::CLASS_SIGN: return "CLASS-SIGN";
    case RuleId::ODD_BLOCKS: return "ODD-BLOCKS";
    case RuleId::ABCA: return "ABCA";
    case RuleId::AABBCC: return "AABBCC";
    case RuleId::NO_PAIRS: return "NO-PAIRS";
    case RuleId::BACABAC: return "BACABAC";
  }
  return "?";
}

namespace {

using Skips = std::span<const std::int64_t>;

// Window w = s[k .. k+len) checks. Each returns true when the window matches
// the forbidden shape.

bool is_aa(Skips w) { return w[0] == w[1]; }

bool is_abab(Skips w) { return w[0] == w[2] && w[1] == w[3] && w[0] != w[1]; }

bool is_aba_div(Skips w) { return w[0] == w[2] && w[1] % w[0] != 0; }

bool is_abca(Skips w) { return w[0] == w[3] && w[0] > w[1] && w[0] > w[2]; }

// Every value in the window occurs exactly twice.
bool all_pairs(Skips w) {
  for (auto x : w)
    if (std::count(w.begin(), w.end(), x) != 2) return false;
  return true;
}

bool is_aabbcc(Skips w) { return all_pairs(w); }

bool is_bacabac(Skips w) {
  const std::int64_t b = w[0], a = w[1], c = w[2];
  return w[3] == a && w[4] == b && w[5] == a && w[6] == c && a != b && a != c && b != c;
}

bool is_odd_block(Skips w) {
  if (w.size() < 3 || (w.size() - 2) % 2 == 0) return false;
  if (w.front() % 2 != 0 || w.back() % 2 != 0) return false;
  return std::all_of(w.begin() + 1, w.end() - 1, [](std::int64_t x) { return x % 2 != 0; });
}

template <typename Pred>
std::optional<std::size_t> first_window(Skips s, std::size_t len, Pred pred) {
  if (s.size() < len) return std::nullopt;
  for (std::size_t k = 0; k + len <= s.size(); ++k)
    if (pred(s.subspan(k, len))) return k;
  return std::nullopt;
}

// Can some choice of signs make g divide the sum of `between`? Residue sets
// are tracked exactly while they stay small; larger spans are not judged.
std::optional<bool> some_signed_sum_divisible(Skips between, std::int64_t g) {
  if (g == 1 || between.empty()) return between.empty() ? true : std::optional<bool>(true);
  constexpr std::size_t kLimit = 1 << 16;
  std::unordered_set<std::int64_t> reach{0};
  for (auto x : between) {
    std::unordered_set<std::int64_t> next;
    const std::int64_t r = x % g;
    for (auto v : reach) {
      next.insert((v + r) % g);
      next.insert(((v - r) % g + g) % g);
    }
    reach = std::move(next);
    if (reach.size() > kLimit) return std::nullopt;
  }
  return reach.count(0) > 0;
}

RuleVerdict hit(RuleId id, std::size_t first, std::size_t last) { return {true, id, first, last}; }

// Rules that only look at skip sizes; shared by both pattern kinds.
std::optional<RuleVerdict> structural_rules_before_gcd(Skips s) {
  if (auto k = first_window(s, 2, is_aa)) return hit(RuleId::AA, *k, *k + 1);
  if (auto k = first_window(s, 4, is_abab)) return hit(RuleId::ABAB, *k, *k + 3);
  if (auto k = first_window(s, 3, is_aba_div)) return hit(RuleId::ABA_DIV, *k, *k + 2);
  // An odd block also fails GCD-span on its end skips; name the specific shape.
  for (std::size_t len = 3; len <= s.size(); ++len)
    if (auto k = first_window(s, len, is_odd_block)) return hit(RuleId::ODD_BLOCKS, *k, *k + len - 1);
  return std::nullopt;
}

std::optional<RuleVerdict> structural_rules_after_signs(Skips s) {
  if (auto k = first_window(s, 4, is_abca)) return hit(RuleId::ABCA, *k, *k + 3);
  if (auto k = first_window(s, 6, is_aabbcc)) return hit(RuleId::AABBCC, *k, *k + 5);
  for (std::size_t len : {2, 4, 6})
    if (auto k = first_window(s, len, all_pairs)) return hit(RuleId::NO_PAIRS, *k, *k + len - 1);
  if (auto k = first_window(s, 7, is_bacabac)) return hit(RuleId::BACABAC, *k, *k + 6);
  return std::nullopt;
}

}  // namespace

RuleVerdict rule_scan(const Pattern& p) {
  const Skips s(p.skips());
  if (auto v = structural_rules_before_gcd(s)) return *v;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 2; j < s.size(); ++j) {
      const auto ok = some_signed_sum_divisible(s.subspan(i + 1, j - i - 1), gcd(s[i], s[j]));
      if (ok && !*ok) return hit(RuleId::GCD_SPAN, i, j);
    }
  if (bpt_signings(p).empty()) {
    std::size_t k = 1;
    while (k < s.size() &&
           !bpt_signings(Pattern(std::vector<std::int64_t>(s.begin(), s.begin() + k + 1))).empty())
      ++k;
    return hit(RuleId::CLASS_SIGN, k - 1, k);
  }
  if (auto v = structural_rules_after_signs(s)) return *v;
  return {};
}

RuleVerdict rule_scan(const SignedPattern& sp) {
  const Pattern p = sp.unsigned_pattern();
  const Skips s(p.skips());
  if (auto v = structural_rules_before_gcd(s)) return *v;
  const auto off = sp.offsets();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 2; j < s.size(); ++j)
      if ((off[j] - off[i + 1]) % gcd(s[i], s[j]) != 0) return hit(RuleId::GCD_SPAN, i, j);
  for (std::size_t k = 0; k + 1 < sp.size(); ++k) {
    const Step& a = sp[k];
    const Step& b = sp[k + 1];
    if (adjacent_parity_ok(a, b)) continue;
    const bool same_sign = a.sign == b.sign;
    return hit(same_sign ? RuleId::PLUS_PLUS : RuleId::CLASS_SIGN, k, k + 1);
  }
  if (auto v = structural_rules_after_signs(s)) return *v;
  return {};
}

std::optional<RuleId> suffix_violation(std::span<const std::int64_t> s) {
  const std::size_t n = s.size();
  auto tail = [&](std::size_t len) { return s.subspan(n - len, len); };
  if (n >= 2 && is_aa(tail(2))) return RuleId::AA;
  if (n >= 4 && is_abab(tail(4))) return RuleId::ABAB;
  if (n >= 3 && is_aba_div(tail(3))) return RuleId::ABA_DIV;
  if (n >= 4 && is_abca(tail(4))) return RuleId::ABCA;
  if (n >= 6 && is_aabbcc(tail(6))) return RuleId::AABBCC;
  if (n >= 4 && all_pairs(tail(4))) return RuleId::NO_PAIRS;
  if (n >= 7 && is_bacabac(tail(7))) return RuleId::BACABAC;
  return std::nullopt;
}

}  // namespace hapdisc
