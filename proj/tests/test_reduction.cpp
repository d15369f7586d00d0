#include <doctest.h>

#include "hapdisc/realizability.hpp"
#include "hapdisc/reduction.hpp"
#include "oracle.hpp"

using namespace hapdisc;

namespace {
EssInstance ess(std::initializer_list<int> v) {
  std::vector<Integer> a;
  for (int x : v) a.emplace_back(x);
  return EssInstance(a);
}
}  // namespace

TEST_CASE("ESS solver") {
  const auto w = ess_solve(ess({1, 2, 3}));
  REQUIRE(w.has_value());
  CHECK(w->x == std::vector<std::size_t>{0, 1});
  CHECK(w->y == std::vector<std::size_t>{2});
  CHECK_FALSE(ess_solve(ess({1, 2})).has_value());
  const auto w2 = ess_solve(ess({2, 3, 5}));
  REQUIRE(w2.has_value());
  CHECK(w2->x == std::vector<std::size_t>{0, 1});
  CHECK(w2->y == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(ess({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ess({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_witness(ess({1, 2, 3}), EssWitness{{0}, {2}}), std::invalid_argument);

  std::vector<Integer> many;
  for (int i = 1; i <= 25; ++i) many.emplace_back(i);
  CHECK_THROWS_AS(ess_solve(EssInstance(many)), std::length_error);
}

TEST_CASE("ESS solver matches plain enumeration") {
  // all subsets of {1..9} with up to 5 elements
  for (int mask = 1; mask < (1 << 9); ++mask) {
    if (__builtin_popcount(mask) > 5) continue;
    std::vector<std::int64_t> a;
    std::vector<Integer> big;
    for (int i = 0; i < 9; ++i)
      if (mask >> i & 1) {
        a.push_back(i + 1);
        big.emplace_back(i + 1);
      }
    const auto want = oracle::ess_first(a);
    const auto got = ess_solve(EssInstance(big));
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->x == want->x);
      CHECK(got->y == want->y);
    }
  }
}

TEST_CASE("D1 instance values") {
  const auto ri = build_d1_instance(ess({1, 2}));
  CHECK(ri.M == 30);
  CHECK(ri.r == 6);
  CHECK(ri.s == std::vector<Integer>{241, 301});
  CHECK(ri.t == 151);

  const auto r3 = build_d1_instance(ess({1, 2, 3}));
  CHECK(r3.M == 1680);
  CHECK(r3.r == 12);
  CHECK(r3.s == std::vector<Integer>{25201, 30241, 35281});
  CHECK(r3.t == 18481);

  for (int mask = 1; mask < (1 << 9); ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    std::vector<std::int64_t> a;
    std::vector<Integer> big;
    for (int i = 0; i < 9; ++i)
      if (mask >> i & 1) {
        a.push_back(i + 1);
        big.emplace_back(i + 1);
      }
    const auto ri = build_d1_instance(EssInstance(big));
    const auto want = oracle::d1_values(a);
    CHECK(ri.M == want.M);
    CHECK(ri.r == want.r);
    CHECK(ri.t == want.t);
    CHECK(ri.s == want.s);
    CHECK(ri.r % static_cast<int>(a.size()) == 0);
    for (const auto& s : ri.s) CHECK(s % 2 == 1);
    if (a.size() >= 2) {
      CHECK(ri.M % 2 == 0);
      CHECK(ri.t % 2 == 1);
    }
  }
  // a single element gives M = a + 1 and t = a + 2
  const auto single = build_d1_instance(ess({2}));
  CHECK(single.M == 3);
  CHECK(single.t == 4);
}

TEST_CASE("witness cycles") {
  const auto inst = ess({1, 2, 3});
  const auto ri = build_d1_instance(inst);
  const auto cyc = witness_cycle(ri, *ess_solve(inst));
  CHECK(format_pattern(cyc) == "[+25201 -35281 +30241 -18481 -1680]");
  CHECK(cyc.signed_sum() == 0);
  CHECK(weakly_realizable(cyc).weakly());

  const auto audit = mod_nM_audit(ri, cyc);
  CHECK(audit.passed);
  CHECK(audit.t_steps == 1);
  CHECK(audit.m_steps == 1);
  CHECK(audit.positive_s == 2);
  CHECK(audit.negative_s == 1);

  const auto other = ess({2, 3, 5});
  const auto ro = build_d1_instance(other);
  CHECK(witness_cycle(ro, *ess_solve(other)).signed_sum() == 0);

  const auto t = static_cast<std::int64_t>(ri.t);
  const auto m = static_cast<std::int64_t>(ri.M);
  const SignedPattern two_t({{1, t}, {-1, t}, {-1, m}});
  CHECK_FALSE(mod_nM_audit(ri, two_t).passed);
  CHECK_THROWS_AS(witness_cycle(ri, EssWitness{{0}, {1}}), std::invalid_argument);
}
