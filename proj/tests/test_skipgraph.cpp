#include <doctest.h>

#include <random>

#include "hapdisc/realizability.hpp"
#include "hapdisc/skipgraph.hpp"
#include "oracle.hpp"

using namespace hapdisc;

TEST_CASE("skip sets") {
  const SkipSet s{4, 2, 6, 2};
  CHECK(s.elements() == std::vector<std::int64_t>{2, 4, 6});
  CHECK(s.gcd() == 2);
  CHECK(s.lcm() == 12);
  CHECK(s.to_string() == "{2,4,6}");
  CHECK(SkipSet::parse(" 1, 2,3 ") == SkipSet{1, 2, 3});
  CHECK_THROWS_AS(SkipSet::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(SkipSet::parse("0,1"), std::invalid_argument);
  CHECK(reduce_set(SkipSet{2, 4, 6}) == std::pair{SkipSet{1, 2, 3}, std::int64_t{2}});
  CHECK(reduce_set(SkipSet{1, 2, 3}) == std::pair{SkipSet{1, 2, 3}, std::int64_t{1}});
  CHECK(reduce_set(SkipSet{6, 10, 16}) == std::pair{SkipSet{3, 5, 8}, std::int64_t{2}});
}

TEST_CASE("graph structure") {
  const auto g = build_graph(SkipSet{2, 3, 4});
  CHECK(g.period() == 24);
  CHECK(g.edge_count(2) == 6);
  CHECK(g.edge_count(3) == 4);
  CHECK(g.edge_count(4) == 3);
  // count directly: each s contributes the arcs {2ms, (2m+1)s} inside the block
  for (std::int64_t s : {2, 3, 4}) {
    int arcs = 0;
    for (std::int64_t u = 0; u < 24; ++u)
      if (oracle::is_arc(u, u + s, s) && u + s < 24) ++arcs;
    CHECK(arcs == g.edge_count(s));
  }
  const auto one = build_graph(SkipSet{1});
  CHECK(one.period() == 2);
  CHECK(one.has_edge(0, 1));
  CHECK(one.has_edge(2, 3));
  CHECK_FALSE(one.has_edge(1, 2));
  CHECK(g.neighbors(12) == std::vector<std::int64_t>{14, 15, 8});
  CHECK_THROWS_AS(build_graph(SkipSet{1, 2, 3}, 8), PeriodCapError);
}

TEST_CASE("two-colouring") {
  CHECK(two_color(build_graph(SkipSet{1, 3})).has_value());
  CHECK_FALSE(two_color(build_graph(SkipSet{1, 2, 3})).has_value());
  CHECK(two_color(build_graph(SkipSet{1, 3, 4})).has_value());

  const auto c = *two_color(build_graph(SkipSet{2, 3, 4}));
  CHECK(verify_discrepancy(c, SkipSet{2, 3, 4}, 10 * 24) == 1);
  CHECK(c.at(1) == 1);  // isolated vertex keeps the default colour
}

TEST_CASE("colour text round-trips") {
  const auto c = *two_color(build_graph(SkipSet{1, 5, 7}));
  CHECK(Coloring::parse(c.to_text()).colors() == c.colors());
  CHECK(Coloring::parse("+ - 1 -1").colors() == std::vector<std::int8_t>{1, -1, 1, -1});
  CHECK_THROWS_AS(Coloring::parse("+1 0"), std::invalid_argument);
  const auto seq = c.erdos_sequence();
  for (std::int64_t n = 1; n <= c.period(); ++n) CHECK(seq[n - 1] == c.at(c.period() - n));
}

TEST_CASE("discrepancy checks") {
  CHECK(verify_discrepancy(Coloring({1, -1}), SkipSet{1}, 50) == 1);
  CHECK(verify_discrepancy(Coloring({1}), SkipSet{1}, 2) == 2);
  CHECK_THROWS_AS(verify_discrepancy(Coloring({1, -1}), SkipSet{3}, 2), std::invalid_argument);
}

TEST_CASE("odd-cycle certificates") {
  const auto tri = find_odd_cycle(build_graph(SkipSet{1, 2, 3}));
  REQUIRE(tri.has_value());
  CHECK(tri->pattern.size() == 3);
  CHECK(valid_odd_cycle(tri->pattern).valid);
  CHECK(realize(tri->pattern, tri->start).shape.simple_cycle());

  const auto seven = find_odd_cycle(build_graph(SkipSet{1, 3, 5, 8}));
  REQUIRE(seven.has_value());
  CHECK(seven->pattern.size() % 2 == 1);
  CHECK(realize(seven->pattern, seven->start).shape.simple_cycle());

  CHECK_FALSE(find_odd_cycle(build_graph(SkipSet{1, 3})).has_value());

  const auto canon = canonical_cycle(parse_signed_pattern("[+1 -3 +2]"), 2);
  CHECK(format_pattern(canon.pattern) == "[+2 +1 -3]");
  CHECK(canon.start == 0);
}

TEST_CASE("colouring and certificates agree with the union-find oracle") {
  std::mt19937 rng(17);
  for (int k = 0; k < 300; ++k) {
    std::vector<std::int64_t> e;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) e.push_back(1 + static_cast<std::int64_t>(rng() % 16));
    const SkipSet s(e);
    if (2 * s.lcm() > (1 << 16)) continue;
    const auto g = build_graph(s);
    const bool bip = oracle::bipartite(s);
    const auto c = two_color(g);
    REQUIRE(c.has_value() == bip);
    if (c) {
      CHECK(verify_discrepancy(*c, s, 3 * g.period()) <= 1);
    } else {
      const auto cert = find_odd_cycle(g);
      REQUIRE(cert.has_value());
      const auto r = realize(cert->pattern, cert->start);
      CHECK(r.valid_walk());
      CHECK(r.shape.simple_cycle());
      CHECK(cert->pattern.size() % 2 == 1);
      for (const auto& st : cert->pattern.steps()) CHECK(s.contains(st.skip));
    }
  }
}
