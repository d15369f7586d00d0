#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

std::int64_t lcm_of(const std::vector<std::int64_t>& xs) {
  std::int64_t l = 1;
  for (auto x : xs) l = std::lcm(l, x);
  return l;
}

namespace {

struct Trace {
  std::vector<std::int64_t> terms;
  bool ok = true;
};

Trace trace(const hapdisc::SignedPattern& sp, std::int64_t start) {
  Trace t;
  std::int64_t v = start;
  t.terms.push_back(v);
  for (const auto& st : sp.steps()) {
    const std::int64_t next = v + st.sign * st.skip;
    if (!is_arc(std::min(v, next), std::max(v, next), st.skip)) {
      t.ok = false;
      return t;
    }
    v = next;
    t.terms.push_back(v);
  }
  return t;
}

std::optional<std::int64_t> scan(const hapdisc::SignedPattern& sp, bool simple, bool closed_ok) {
  std::vector<std::int64_t> skips;
  std::int64_t off = 0, low = 0;
  for (const auto& st : sp.steps()) {
    skips.push_back(st.skip);
    off += st.sign * st.skip;
    low = std::min(low, off);
  }
  const std::int64_t period = 2 * lcm_of(skips);
  for (std::int64_t t = -low; t < -low + period; ++t) {
    const Trace tr = trace(sp, t);
    if (!tr.ok) continue;
    if (!simple) return t;
    std::vector<std::int64_t> terms = tr.terms;
    if (closed_ok && terms.size() > 1 && terms.front() == terms.back()) terms.pop_back();
    std::set<std::int64_t> distinct(terms.begin(), terms.end());
    std::set<std::pair<std::int64_t, std::int64_t>> arcs;
    for (std::size_t k = 0; k + 1 < tr.terms.size(); ++k)
      arcs.insert({std::min(tr.terms[k], tr.terms[k + 1]), std::max(tr.terms[k], tr.terms[k + 1])});
    // simplicity does not depend on the start, so the first valid start decides
    if (distinct.size() == terms.size() && arcs.size() == sp.size()) return t;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::int64_t> least_walk_start(const hapdisc::SignedPattern& sp) { return scan(sp, false, false); }

std::optional<std::int64_t> least_simple_walk_start(const hapdisc::SignedPattern& sp, bool closed_ok) {
  return scan(sp, true, closed_ok);
}

bool bipartite(const hapdisc::SkipSet& s) {
  const std::int64_t period = 2 * lcm_of(s.elements());
  std::vector<std::int64_t> parent(static_cast<std::size_t>(period));
  std::vector<std::uint8_t> parity(static_cast<std::size_t>(period), 0);  // parity to parent
  std::iota(parent.begin(), parent.end(), 0);

  auto find = [&](std::int64_t v) {
    std::uint8_t p = 0;
    std::int64_t root = v;
    while (parent[root] != root) {
      p ^= parity[root];
      root = parent[root];
    }
    // compress, recomputing each node's parity to the root
    std::uint8_t acc = p;
    while (parent[v] != v) {
      const std::int64_t next = parent[v];
      const std::uint8_t own = parity[v];
      parent[v] = root;
      parity[v] = acc;
      acc ^= own;
      v = next;
    }
    return std::pair{root, p};
  };

  for (auto s_ : s) {
    for (std::int64_t v = 0; v < period; v += 2 * s_) {
      auto [ra, pa] = find(v);
      auto [rb, pb] = find(v + s_);
      if (ra == rb) {
        if (pa == pb) return false;
        continue;
      }
      parent[ra] = rb;
      parity[ra] = static_cast<std::uint8_t>(pa ^ pb ^ 1);
    }
  }
  return true;
}

std::optional<EssSolution> ess_first(const std::vector<std::int64_t>& a) {
  const std::size_t n = a.size();
  std::vector<int> digit(n, 0);
  while (true) {
    // advance to the next assignment in lexicographic order (last digit fastest)
    std::size_t k = n;
    while (k > 0 && digit[k - 1] == 2) digit[--k] = 0;
    if (k == 0) return std::nullopt;
    ++digit[k - 1];

    std::int64_t sx = 0, sy = 0;
    EssSolution sol;
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] == 1) {
        sx += a[i];
        sol.x.push_back(i);
      } else if (digit[i] == 2) {
        sy += a[i];
        sol.y.push_back(i);
      }
    }
    if (sx == sy && sol.x.size() == sol.y.size() + 1) return sol;
  }
}

D1Values d1_values(const std::vector<std::int64_t>& a) {
  const auto n = static_cast<std::int64_t>(a.size());
  D1Values v;
  v.M = n;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) v.M *= a[j] - a[i];
    v.M *= n * a[i] + 1;
  }
  // r: smallest multiple of n with r > (n/2)(n(a_n - a_1) + 1) + 1, i.e. 2r > twice that
  const Integer twice = Integer(n) * (n * (a.back() - a.front()) + 1) + 2;
  v.r = n;
  while (2 * v.r <= twice) v.r += n;
  v.t = (v.r - 1) * v.M + 1;
  for (auto x : a) v.s.push_back(Integer(n) * v.M * x + v.r * v.M + 1);
  return v;
}

std::vector<hapdisc::SignedPattern> all_signed_patterns(std::int64_t max_skip, std::size_t len) {
  std::vector<hapdisc::SignedPattern> out;
  std::vector<hapdisc::Step> steps(len);
  const std::int64_t choices = 2 * max_skip;
  std::int64_t total = 1;
  for (std::size_t k = 0; k < len; ++k) total *= choices;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    for (std::size_t k = 0; k < len; ++k) {
      const std::int64_t d = c % choices;
      c /= choices;
      steps[k] = {d % 2 == 0 ? 1 : -1, d / 2 + 1};
    }
    out.emplace_back(steps);
  }
  return out;
}

}  // namespace oracle
