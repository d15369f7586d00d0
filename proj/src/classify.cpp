#include "hapdisc/classify.hpp"

#include <algorithm>
#include <array>

#include "hapdisc/realizability.hpp"

namespace hapdisc {

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::none: return "none";
    case Rule::size3: return "size3";
    case Rule::size4_bullet1: return "size4-bullet-1";
    case Rule::size4_bullet2: return "size4-bullet-2";
    case Rule::size4_bullet3: return "size4-bullet-3";
    case Rule::size4_bullet4: return "size4-bullet-4";
  }
  return "?";
}

UnsupportedSizeError::UnsupportedSizeError(std::size_t size)
    : std::invalid_argument("closed-form classification covers |S| <= 4, got |S| = " +
                            std::to_string(size) + "; use the skip graph for larger sets") {}

namespace {

using Labeling = std::vector<std::pair<std::string, std::int64_t>>;

struct Candidate {
  Rule rule;
  Labeling labeling;
  SignedPattern cycle;
};

bool even(std::int64_t v) { return v % 2 == 0; }
int v2(std::int64_t v) { return two_adic_valuation(v); }

SignedPattern make(std::initializer_list<std::int64_t> deltas) {
  std::vector<Step> steps;
  for (auto d : deltas) steps.push_back({d > 0 ? 1 : -1, d > 0 ? d : -d});
  return SignedPattern(std::move(steps));
}

// a + b = c with a, b in different 2-classes; higher class goes first.
std::optional<Candidate> triple_rule(std::int64_t p, std::int64_t q, std::int64_t r, Rule rule) {
  std::array<std::int64_t, 3> t{p, q, r};
  std::sort(t.begin(), t.end());
  auto [a, b, c] = t;
  if (a + b != c || v2(a) == v2(b)) return std::nullopt;
  if (v2(b) > v2(a)) std::swap(a, b);
  return Candidate{rule, {{"a", a}, {"b", b}, {"c", c}}, make({a, b, -c})};
}

void require(const SkipSet& s, std::size_t size) {
  if (s.size() != size)
    throw std::invalid_argument("expected a skip set of size " + std::to_string(size));
  if (!s.is_reduced()) throw std::invalid_argument("expected a reduced skip set (gcd 1)");
}

Classification from(std::optional<Candidate> c, std::vector<Rule> satisfied) {
  Classification out;
  out.satisfied = std::move(satisfied);
  if (!c) return out;
  out.forces = true;
  out.rule = c->rule;
  out.labeling = std::move(c->labeling);
  out.cycle_start = valid_odd_cycle(c->cycle).witness_start;
  out.predicted_cycle = std::move(c->cycle);
  return out;
}

std::optional<Candidate> bullet1(const std::vector<std::int64_t>& e) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (auto c = triple_rule(e[i], e[j], e[k], Rule::size4_bullet1)) return c;
  return std::nullopt;
}

// Two evens of the same class with b | a, both odds x, y coprime to a up to b.
std::optional<Candidate> bullet2(const std::vector<std::int64_t>& evens,
                                 const std::vector<std::int64_t>& odds) {
  if (evens.size() != 2 || odds.size() != 2) return std::nullopt;
  for (int ea = 0; ea < 2; ++ea) {
    const std::int64_t a = evens[ea], b = evens[1 - ea];
    if (v2(a) != v2(b) || a % b != 0) continue;
    for (int ox = 0; ox < 2; ++ox) {
      const std::int64_t x = odds[ox], y = odds[1 - ox];
      if (b % gcd(a, x) != 0 || b % gcd(a, y) != 0) continue;
      if (a != 2 * b + y - x) continue;
      return Candidate{Rule::size4_bullet2,
                       {{"a", a}, {"b", b}, {"x", x}, {"y", y}},
                       make({b, -a, b, y, -x})};
    }
  }
  return std::nullopt;
}

// One even a; odds labelled x, y, z with a = +-(2x - y - z), x | y,
// gcd(y, z) | x and gcd(a, y) | x.
std::optional<Candidate> bullet3(const std::vector<std::int64_t>& evens,
                                 std::vector<std::int64_t> odds) {
  if (evens.size() != 1 || odds.size() != 3) return std::nullopt;
  const std::int64_t a = evens[0];
  std::sort(odds.begin(), odds.end());
  do {
    const std::int64_t x = odds[0], y = odds[1], z = odds[2];
    if (y % x != 0 || x % gcd(y, z) != 0 || x % gcd(a, y) != 0) continue;
    const std::int64_t combo = 2 * x - y - z;
    const Labeling labels{{"a", a}, {"x", x}, {"y", y}, {"z", z}};
    if (a == combo) return Candidate{Rule::size4_bullet3, labels, make({-a, x, -y, x, -z})};
    if (a == -combo) return Candidate{Rule::size4_bullet3, labels, make({a, x, -y, x, -z})};
  } while (std::next_permutation(odds.begin(), odds.end()));
  return std::nullopt;
}

// {a, x, y, 1} with a the only even, a = 2x + y - 3, x | a + 1, gcd(a, y) = 1.
std::optional<Candidate> bullet4(const SkipSet& s, const std::vector<std::int64_t>& evens,
                                 const std::vector<std::int64_t>& odds) {
  if (!s.contains(1) || evens.size() != 1 || odds.size() != 3) return std::nullopt;
  const std::int64_t a = evens[0];
  std::vector<std::int64_t> rest;
  for (auto o : odds)
    if (o != 1) rest.push_back(o);
  for (int ix = 0; ix < 2; ++ix) {
    const std::int64_t x = rest[ix], y = rest[1 - ix];
    if (a != 2 * x + y - 3 || (a + 1) % x != 0 || gcd(a, y) != 1) continue;
    return Candidate{Rule::size4_bullet4,
                     {{"a", a}, {"x", x}, {"y", y}, {"z", 1}},
                     make({a, 1, -x, 1, -y, 1, -x})};
  }
  return std::nullopt;
}

}  // namespace

Classification classify_size3(const SkipSet& s) {
  require(s, 3);
  auto c = triple_rule(s[0], s[1], s[2], Rule::size3);
  std::vector<Rule> satisfied;
  if (c) satisfied.push_back(Rule::size3);
  return from(std::move(c), std::move(satisfied));
}

Classification classify_size4(const SkipSet& s) {
  require(s, 4);
  const auto& e = s.elements();
  std::vector<std::int64_t> evens, odds;
  for (auto v : e) (even(v) ? evens : odds).push_back(v);

  std::vector<std::optional<Candidate>> bullets;
  bullets.push_back(bullet1(e));
  bullets.push_back(bullet2(evens, odds));
  bullets.push_back(bullet3(evens, odds));
  bullets.push_back(bullet4(s, evens, odds));

  std::vector<Rule> satisfied;
  std::optional<Candidate> first;
  for (auto& b : bullets) {
    if (!b) continue;
    satisfied.push_back(b->rule);
    if (!first) first = std::move(b);
  }
  return from(std::move(first), std::move(satisfied));
}

Classification classify(const SkipSet& s) {
  if (s.empty()) throw std::invalid_argument("classify: empty skip set");
  if (s.size() > 4) throw UnsupportedSizeError(s.size());
  auto [reduced, factor] = reduce_set(s);
  Classification out;
  if (reduced.size() == 3) out = classify_size3(reduced);
  if (reduced.size() == 4) out = classify_size4(reduced);
  out.reduction_factor = factor;
  if (out.predicted_cycle && factor != 1) {
    out.predicted_cycle = out.predicted_cycle->scaled(factor);
    out.cycle_start = valid_odd_cycle(*out.predicted_cycle).witness_start;
  }
  return out;
}

}  // namespace hapdisc
