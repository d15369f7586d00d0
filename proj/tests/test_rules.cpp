#include <doctest.h>

#include <random>

#include "hapdisc/realizability.hpp"
#include "hapdisc/rules.hpp"
#include "oracle.hpp"

using namespace hapdisc;

namespace {

RuleVerdict scan(const char* text) {
  const AnyPattern p = parse_pattern(text);
  return std::visit([](const auto& x) { return rule_scan(x); }, p);
}

std::string rule_of(const char* text) {
  const auto v = scan(text);
  return v.rule ? std::string(to_string(*v.rule)) : "none";
}

// Every unsigned pattern of length `len` over 1..max_skip, in odometer order.
template <typename F>
void each_pattern(std::int64_t max_skip, std::size_t len, F f) {
  std::vector<std::int64_t> w(len, 1);
  while (true) {
    f(Pattern(w));
    std::size_t k = len;
    while (k > 0 && w[k - 1] == max_skip) w[--k] = 1;
    if (k == 0) return;
    ++w[k - 1];
  }
}

}  // namespace

TEST_CASE("named examples") {
  CHECK(rule_of("[7 7]") == "AA");
  CHECK(rule_of("[3 5 3 5]") == "ABAB");
  CHECK(rule_of("[1 4 6 3 1 4 6 3 1 4]") == "none");
  CHECK(rule_of("[3 5 3]") == "ABA-div");
  CHECK(rule_of("[3 6 3]") == "none");
  CHECK(rule_of("[5 1 10]") == "GCD-span");
  CHECK(rule_of("[+3 +5]") == "PLUS-PLUS");
  CHECK(rule_of("[+1 -2]") == "CLASS-SIGN");
  CHECK(rule_of("[2 3 4]") == "ODD-BLOCKS");
  CHECK(rule_of("[2 3 1 5 4]") == "ODD-BLOCKS");
  CHECK(rule_of("[5 2 3 5]") == "ABCA");
  CHECK(rule_of("[2 1 3 4]") == "none");
  CHECK(rule_of("[2 1 3]") == "none");

  const auto v = scan("[1 3 5 5]");
  CHECK(v.forbidden);
  CHECK(v.first == 2);
  CHECK(v.last == 3);
}

TEST_CASE("suffix checks") {
  const std::vector<std::int64_t> aa{4, 7, 7};
  CHECK(suffix_violation(aa) == RuleId::AA);
  const std::vector<std::int64_t> abab{1, 3, 5, 3, 5};
  CHECK(suffix_violation(abab) == RuleId::ABAB);
  const std::vector<std::int64_t> abba{2, 1, 1, 2};
  CHECK(suffix_violation(abba) == RuleId::ABCA);
  const std::vector<std::int64_t> abba_small{1, 2, 2, 1};
  CHECK(suffix_violation(abba_small) == RuleId::NO_PAIRS);
  const std::vector<std::int64_t> pairs{2, 1, 3, 1, 2, 3};
  CHECK(suffix_violation(pairs).has_value());
  const std::vector<std::int64_t> bac{2, 1, 3, 1, 2, 1, 3};
  CHECK(suffix_violation(bac).has_value());
  const std::vector<std::int64_t> ok{8, 1, 3, 1, 5, 1, 3};
  CHECK_FALSE(suffix_violation(ok).has_value());
}

TEST_CASE("rules never reject a realizable unsigned pattern") {
  for (std::size_t len = 2; len <= 5; ++len)
    each_pattern(8, len, [](const Pattern& p) {
      const auto v = rule_scan(p);
      if (!v.forbidden) return;
      const auto best = strict_realizability(p, WalkKind::path);
      INFO(format_pattern(p), " ", to_string(*v.rule));
      CHECK_FALSE(best.verdict.strict());
    });
}

TEST_CASE("rules never reject a realizable signed pattern") {
  for (std::size_t len = 2; len <= 4; ++len)
    for (const auto& sp : oracle::all_signed_patterns(6, len)) {
      const auto v = rule_scan(sp);
      if (!v.forbidden) continue;
      INFO(format_pattern(sp), " ", to_string(*v.rule));
      CHECK_FALSE(oracle::least_simple_walk_start(sp, false).has_value());
    }
}
