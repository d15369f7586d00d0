#include "hapdisc/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hapdisc/realizability.hpp"
#include "hapdisc/rules.hpp"

namespace hapdisc {

std::string_view to_string(SearchKind k) { return k == SearchKind::path ? "path" : "cycle"; }

namespace {

using i128 = __int128;

// Moduli stay below this so that residues plus offsets never overflow.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 61;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return floor_mod(old_s, m);
}

struct Residue {
  std::int64_t r = 0;
  std::int64_t m = 1;
};

std::optional<Residue> merge(Residue a, Residue b) {
  const std::int64_t g = std::gcd(a.m, b.m);
  const std::int64_t diff = b.r - a.r;
  if (diff % g != 0) return std::nullopt;
  const std::int64_t mg = b.m / g;
  const std::int64_t k =
      static_cast<std::int64_t>(static_cast<i128>(floor_mod(diff / g, mg)) * mod_inverse((a.m / g) % mg, mg) % mg);
  const i128 m = static_cast<i128>(a.m) * mg;
  if (m > kMaxModulus) throw std::overflow_error("search: congruence modulus exceeds 2^61");
  const auto r = static_cast<std::int64_t>((a.r + static_cast<i128>(a.m) * k) % m);
  return Residue{r, static_cast<std::int64_t>(m)};
}

struct Candidate {
  std::size_t length = 0;
  std::int64_t start = 0;
  std::vector<Step> steps;
};

// Sign sequence with + first, then larger skips first.
bool ordered_before(const std::vector<Step>& a, const std::vector<Step>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].sign != b[k].sign) return a[k].sign > b[k].sign;
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].skip != b[k].skip) return a[k].skip > b[k].skip;
  }
  return false;
}

class Searcher {
 public:
  Searcher(const SkipSet& s, SearchKind kind, const SearchOptions& opts)
      : skips_(s.elements().rbegin(), s.elements().rend()), kind_(kind), opts_(opts) {
    if (opts.max_len == 0) throw std::invalid_argument("search: max_len must be positive");
    if (s.max() > kMaxModulus / 2) throw std::overflow_error("search: skip too large");
    offs_.push_back(0);
    lows_.push_back(0);
    crt_.push_back({});
  }

  SearchOutcome run() {
    dfs();
    SearchOutcome out;
    out.exhaustive = !truncated_ && !aborted_;
    out.nodes = nodes_;
    if (best_.length == 0) return out;
    SearchResult res;
    res.kind = kind_;
    res.length = best_.length;
    res.start = best_.start;
    res.signed_pattern = SignedPattern(best_.steps);
    res.pattern = res.signed_pattern.unsigned_pattern();
    res.lower_bound = !out.exhaustive;
    confirm(res);
    out.best = std::move(res);
    return out;
  }

 private:
  bool cycle() const { return kind_ == SearchKind::odd_cycle; }

  void dfs() {
    const std::size_t depth = steps_.size();
    const std::int64_t here = offs_.back();
    for (const std::int64_t s : skips_) {
      for (const int sign : {1, -1}) {
        if (aborted_) return;
        if (cycle() && depth == 0 && sign < 0) continue;
        const std::int64_t next = here + sign * s;
        const bool closing = cycle() && next == 0;
        if (cycle() && next < 0) continue;
        if (closing) {
          if ((depth + 1) % 2 == 0 || depth + 1 < 3) continue;
        } else if (std::find(offs_.begin(), offs_.end(), next) != offs_.end()) {
          continue;
        }
        skip_seq_.push_back(s);
        const bool pruned = opts_.use_rules && !closing && suffix_violation(skip_seq_).has_value();
        skip_seq_.pop_back();
        if (pruned) continue;

        const Residue step{floor_mod((sign > 0 ? 0 : s) - here, 2 * s), 2 * s};
        const auto merged = merge(crt_.back(), step);
        if (!merged) continue;

        if (depth == opts_.max_len) {
          truncated_ = true;
          continue;
        }
        if (opts_.node_limit != 0 && nodes_ >= opts_.node_limit) {
          aborted_ = true;
          return;
        }
        ++nodes_;

        steps_.push_back({sign, s});
        skip_seq_.push_back(s);
        offs_.push_back(next);
        lows_.push_back(std::min(lows_.back(), next));
        crt_.push_back(*merged);
        if (closing || !cycle()) consider();
        if (!closing) dfs();
        crt_.pop_back();
        lows_.pop_back();
        offs_.pop_back();
        skip_seq_.pop_back();
        steps_.pop_back();
      }
    }
  }

  void consider() {
    const std::size_t length = steps_.size();
    if (length < best_.length) return;
    const Residue& c = crt_.back();
    std::int64_t start = c.r;
    const std::int64_t low = lows_.back();
    if (start + low < 0) {
      const std::int64_t need = -low - start;
      start += ((need + c.m - 1) / c.m) * c.m;
    }
    if (length == best_.length) {
      if (start > best_.start) return;
      if (start == best_.start && !ordered_before(steps_, best_.steps)) return;
    }
    best_ = {length, start, steps_};
  }

  void confirm(const SearchResult& res) const {
    const SignedPattern& sp = res.signed_pattern;
    std::optional<Integer> witness;
    if (cycle()) {
      const CycleVerdict v = valid_odd_cycle(sp);
      if (!v.valid) throw std::logic_error("search produced an invalid odd cycle " + format_pattern(sp));
      witness = v.witness_start;
    } else {
      const RealizabilityVerdict v = strict_realizability(sp, WalkKind::path);
      if (!v.strict()) throw std::logic_error("search produced an unrealizable path " + format_pattern(sp));
      witness = v.witness_start;
    }
    if (!witness || *witness != res.start)
      throw std::logic_error("search start disagrees with the realizability engine");
  }

  std::vector<std::int64_t> skips_;
  SearchKind kind_;
  SearchOptions opts_;

  std::vector<Step> steps_;
  std::vector<std::int64_t> skip_seq_;
  std::vector<std::int64_t> offs_;
  std::vector<std::int64_t> lows_;
  std::vector<Residue> crt_;

  Candidate best_;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
  bool aborted_ = false;
};

}  // namespace

SearchOutcome search_paths(const SkipSet& s, const SearchOptions& opts) {
  if (s.empty()) throw std::invalid_argument("search: empty skip set");
  return Searcher(s, SearchKind::path, opts).run();
}

SearchOutcome search_odd_cycles(const SkipSet& s, const SearchOptions& opts) {
  if (s.empty()) throw std::invalid_argument("search: empty skip set");
  return Searcher(s, SearchKind::odd_cycle, opts).run();
}

SearchResult longest_path(const SkipSet& s, std::size_t max_len) {
  SearchOptions opts;
  opts.max_len = max_len;
  return *search_paths(s, opts).best;
}

std::optional<SearchResult> longest_odd_cycle(const SkipSet& s, std::size_t max_len) {
  SearchOptions opts;
  opts.max_len = max_len;
  return search_odd_cycles(s, opts).best;
}

}  // namespace hapdisc
