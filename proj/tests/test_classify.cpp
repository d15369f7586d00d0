#include <doctest.h>

#include "hapdisc/classify.hpp"
#include "hapdisc/realizability.hpp"
#include "oracle.hpp"

using namespace hapdisc;

TEST_CASE("sizes one and two never force") {
  CHECK_FALSE(classify(SkipSet{7}).forces);
  CHECK_FALSE(classify(SkipSet{1, 3}).forces);
  CHECK_FALSE(classify(SkipSet{2, 4}).forces);
}

TEST_CASE("size three") {
  const auto c = classify_size3(SkipSet{1, 2, 3});
  CHECK(c.forces);
  CHECK(c.rule == Rule::size3);
  CHECK(format_pattern(*c.predicted_cycle) == "[+2 +1 -3]");
  CHECK(*c.cycle_start == 0);

  CHECK_FALSE(classify_size3(SkipSet{1, 3, 4}).forces);
  CHECK_FALSE(classify_size3(SkipSet{2, 3, 7}).forces);
  CHECK_THROWS_AS(classify_size3(SkipSet{2, 4, 6}), std::invalid_argument);
  CHECK_THROWS_AS(classify_size3(SkipSet{1, 2}), std::invalid_argument);

  const auto scaled = classify(SkipSet{2, 4, 6});
  CHECK(scaled.forces);
  CHECK(scaled.reduction_factor == 2);
  CHECK(format_pattern(*scaled.predicted_cycle) == "[+4 +2 -6]");
  CHECK(valid_odd_cycle(*scaled.predicted_cycle).valid);
}

TEST_CASE("size four bullets") {
  const auto b4 = classify_size4(SkipSet{1, 3, 5, 8});
  CHECK(b4.rule == Rule::size4_bullet4);
  CHECK(format_pattern(*b4.predicted_cycle) == "[+8 +1 -3 +1 -5 +1 -3]");
  CHECK(*b4.cycle_start == 48);
  CHECK(b4.labeling == std::vector<std::pair<std::string, std::int64_t>>{{"a", 8}, {"x", 3}, {"y", 5}, {"z", 1}});

  const auto b2 = classify_size4(SkipSet{1, 2, 7, 10});
  CHECK(b2.rule == Rule::size4_bullet2);
  CHECK(format_pattern(*b2.predicted_cycle) == "[+2 -10 +2 +7 -1]");
  CHECK(valid_odd_cycle(*b2.predicted_cycle).valid);

  const auto b1 = classify_size4(SkipSet{1, 2, 3, 10});
  CHECK(b1.rule == Rule::size4_bullet1);
  CHECK(classify_size4(SkipSet{1, 2, 4, 6}).rule == Rule::size4_bullet1);

  CHECK(classify_size4(SkipSet{1, 4, 6, 9}).forces == !oracle::bipartite(SkipSet{1, 4, 6, 9}));
  CHECK_THROWS_AS(classify(SkipSet{3, 9, 16, 18, 19, 20}), UnsupportedSizeError);
  CHECK_THROWS_AS(classify(SkipSet{}), std::invalid_argument);
}

TEST_CASE("every predicted cycle is a valid odd cycle") {
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = a + 1; b <= 12; ++b)
      for (std::int64_t c = b + 1; c <= 12; ++c)
        for (std::int64_t d = c + 1; d <= 12; ++d) {
          const SkipSet s{a, b, c, d};
          const auto cl = classify(s);
          CHECK(cl.forces == !oracle::bipartite(s));
          if (!cl.forces) continue;
          const auto v = valid_odd_cycle(*cl.predicted_cycle);
          CHECK(v.valid);
          for (const auto& st : cl.predicted_cycle->steps()) CHECK(s.contains(st.skip));
        }
}
