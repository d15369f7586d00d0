#include "hapdisc/skipgraph.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace hapdisc {

PeriodCapError::PeriodCapError(Integer period, std::int64_t cap)
    : std::runtime_error("period 2*lcm(S) = " + period.str() + " exceeds the cap " +
                         std::to_string(cap)),
      period_(std::move(period)) {}

SkipGraph build_graph(const SkipSet& s, std::int64_t cap) {
  if (s.empty()) throw std::invalid_argument("build_graph: empty skip set");
  const Integer period = 2 * s.lcm();
  // Vertices are indexed with 32-bit integers during the searches below.
  const std::int64_t hard_limit = std::numeric_limits<std::uint32_t>::max();
  if (period > cap || period > hard_limit) throw PeriodCapError(period, std::min(cap, hard_limit));
  return SkipGraph(s, static_cast<std::int64_t>(period / 2));
}

std::vector<std::int64_t> SkipGraph::neighbors(std::int64_t v) const {
  std::vector<std::int64_t> out;
  for_each_neighbor(v % period(), [&](std::int64_t w) { out.push_back(w); });
  return out;
}

bool SkipGraph::has_edge(std::int64_t u, std::int64_t v) const {
  const std::int64_t lo = std::min(u, v), hi = std::max(u, v);
  const std::int64_t s = hi - lo;
  return lo >= 0 && skips_.contains(s) && lo % s == 0 && (lo / s) % 2 == 0;
}

// ---- colouring ------------------------------------------------------------

Coloring::Coloring(std::vector<std::int8_t> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) throw std::invalid_argument("colouring must cover at least one vertex");
  for (auto c : colors_)
    if (c != 1 && c != -1) throw std::invalid_argument("colours must be +1 or -1");
}

int Coloring::at(std::int64_t v) const {
  const std::int64_t p = period();
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return colors_[static_cast<std::size_t>(r)];
}

std::string Coloring::to_text() const {
  std::string out;
  out.reserve(colors_.size() * 3);
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (i) out += ' ';
    out += colors_[i] > 0 ? "+1" : "-1";
  }
  return out;
}

Coloring Coloring::parse(std::string_view text) {
  std::vector<std::int8_t> colors;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "+1" || tok == "1" || tok == "+")
      colors.push_back(1);
    else if (tok == "-1" || tok == "-")
      colors.push_back(-1);
    else
      throw std::invalid_argument("bad colour token '" + tok + "'");
  }
  return Coloring(std::move(colors));
}

std::vector<std::int8_t> Coloring::erdos_sequence() const {
  std::vector<std::int8_t> out(colors_.size());
  for (std::int64_t n = 1; n <= period(); ++n) out[static_cast<std::size_t>(n - 1)] = static_cast<std::int8_t>(at(period() - n));
  return out;
}

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

struct BfsConflict {
  std::uint32_t u;
  std::uint32_t w;
};

// BFS over the block; records colours and tree parents, stops at the first
// edge joining two vertices of the same colour.
std::optional<BfsConflict> bfs_bipartition(const SkipGraph& g, std::vector<std::int8_t>& color,
                                           std::vector<std::uint32_t>* parent) {
  const auto n = static_cast<std::size_t>(g.period());
  color.assign(n, 0);
  if (parent) parent->assign(n, kNoParent);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(root));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      std::optional<BfsConflict> conflict;
      g.for_each_neighbor(u, [&](std::int64_t wv) {
        if (conflict) return;
        const auto w = static_cast<std::uint32_t>(wv);
        if (color[w] == 0) {
          color[w] = static_cast<std::int8_t>(-color[u]);
          if (parent) (*parent)[w] = u;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          conflict = BfsConflict{u, w};
        }
      });
      if (conflict) return conflict;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Coloring> two_color(const SkipGraph& g) {
  std::vector<std::int8_t> color;
  if (bfs_bipartition(g, color, nullptr)) return std::nullopt;
  return Coloring(std::move(color));
}

OddCycleCertificate canonical_cycle(const SignedPattern& cycle, std::int64_t start) {
  const auto off = cycle.offsets();
  const std::size_t n = cycle.size();
  std::size_t lowest = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (off[k] < off[lowest]) lowest = k;
  const std::int64_t min_term = start + off[lowest];

  const SignedPattern forward = cycle.rotated(lowest);
  const SignedPattern backward = forward.reversed();
  // signs first (+ before -), then skips largest first
  auto key = [](const SignedPattern& sp) {
    std::vector<std::int64_t> k;
    for (const auto& st : sp.steps()) k.push_back(-st.sign);
    for (const auto& st : sp.steps()) k.push_back(-st.skip);
    return k;
  };
  return {key(backward) < key(forward) ? backward : forward, min_term};
}

std::optional<OddCycleCertificate> find_odd_cycle(const SkipGraph& g) {
  std::vector<std::int8_t> color;
  std::vector<std::uint32_t> parent;
  const auto conflict = bfs_bipartition(g, color, &parent);
  if (!conflict) return std::nullopt;

  // Tree paths from both conflict endpoints up to their lowest common ancestor.
  // Both chains end at the same BFS root; strip the shared tail.
  std::vector<std::uint32_t> up_u, up_w;  // u ... lca, w ... lca
  for (std::uint32_t v = conflict->u; v != kNoParent; v = parent[v]) up_u.push_back(v);
  for (std::uint32_t v = conflict->w; v != kNoParent; v = parent[v]) up_w.push_back(v);
  while (up_u.size() > 1 && up_w.size() > 1 &&
         up_u[up_u.size() - 2] == up_w[up_w.size() - 2]) {
    up_u.pop_back();
    up_w.pop_back();
  }

  // lca -> ... -> u -> w -> ... -> (child of lca) -> lca
  std::vector<std::int64_t> vertices(up_u.rbegin(), up_u.rend());
  for (std::size_t k = 0; k + 1 < up_w.size(); ++k) vertices.push_back(up_w[k]);
  vertices.push_back(vertices.front());

  std::vector<Step> steps;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const std::int64_t d = vertices[k + 1] - vertices[k];
    steps.push_back({d > 0 ? 1 : -1, d > 0 ? d : -d});
  }
  return canonical_cycle(SignedPattern(std::move(steps)), vertices.front());
}

std::int64_t verify_discrepancy(const Coloring& c, const SkipSet& s, std::int64_t horizon) {
  if (s.empty()) throw std::invalid_argument("verify_discrepancy: empty skip set");
  if (horizon < s.max()) throw std::invalid_argument("verify_discrepancy: horizon below max(S)");
  const std::int64_t p = c.period();
  std::int64_t worst = 0;
  for (auto step : s) {
    std::int64_t sum = 0;
    for (std::int64_t n = step; n <= horizon; n += step) {
      sum += c.at(p - n % p);
      worst = std::max(worst, sum < 0 ? -sum : sum);
    }
  }
  return worst;
}

}  // namespace hapdisc
