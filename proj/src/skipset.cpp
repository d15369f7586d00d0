#include "hapdisc/skipset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace hapdisc {

SkipSet::SkipSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  for (auto s : elements_)
    if (s < 1) throw std::invalid_argument("skip sizes must be positive");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

SkipSet SkipSet::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at) {
    return std::invalid_argument("bad skip set '" + std::string(text) + "' at position " + std::to_string(at));
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw std::invalid_argument("empty skip set");
  while (true) {
    skip_space();
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) throw fail(pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw fail(pos);
    ++pos;
  }
  return SkipSet(std::move(out));
}

bool SkipSet::contains(std::int64_t s) const {
  return std::binary_search(elements_.begin(), elements_.end(), s);
}

std::int64_t SkipSet::gcd() const {
  std::int64_t g = 0;
  for (auto s : elements_) g = hapdisc::gcd(g, s);
  return g;
}

Integer SkipSet::lcm() const {
  Integer l = 1;
  for (auto s : elements_) l = hapdisc::lcm(l, Integer(s));
  return l;
}

std::string SkipSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

std::pair<SkipSet, std::int64_t> reduce_set(const SkipSet& s) {
  const std::int64_t g = s.empty() ? 1 : s.gcd();
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (auto x : s) out.push_back(x / g);
  return {SkipSet(std::move(out)), g};
}

}  // namespace hapdisc
