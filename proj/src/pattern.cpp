#include "hapdisc/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace hapdisc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("pattern offset overflows 64 bits");
  return r;
}

}  // namespace

Pattern::Pattern(std::vector<std::int64_t> skips) : skips_(std::move(skips)) {
  if (skips_.empty()) throw std::invalid_argument("pattern must have at least one skip");
  for (auto s : skips_)
    if (s < 1) throw std::invalid_argument("pattern skips must be positive");
}

SignedPattern::SignedPattern(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("pattern must have at least one step");
  for (const auto& st : steps_) {
    if (st.skip < 1) throw std::invalid_argument("pattern skips must be positive");
    if (st.sign != 1 && st.sign != -1) throw std::invalid_argument("step sign must be +1 or -1");
  }
}

Pattern SignedPattern::unsigned_pattern() const {
  std::vector<std::int64_t> skips;
  skips.reserve(steps_.size());
  for (const auto& st : steps_) skips.push_back(st.skip);
  return Pattern(std::move(skips));
}

std::int64_t SignedPattern::signed_sum() const {
  std::int64_t sum = 0;
  for (const auto& st : steps_) sum = checked_add(sum, st.delta());
  return sum;
}

std::vector<std::int64_t> SignedPattern::offsets() const {
  std::vector<std::int64_t> out;
  out.reserve(steps_.size() + 1);
  out.push_back(0);
  for (const auto& st : steps_) out.push_back(checked_add(out.back(), st.delta()));
  return out;
}

SignedPattern SignedPattern::reversed() const {
  std::vector<Step> out;
  out.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) out.push_back({-it->sign, it->skip});
  return SignedPattern(std::move(out));
}

SignedPattern SignedPattern::rotated(std::size_t first) const {
  std::vector<Step> out(steps_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(first % out.size()), out.end());
  return SignedPattern(std::move(out));
}

SignedPattern SignedPattern::scaled(std::int64_t factor) const {
  std::vector<Step> out(steps_);
  for (auto& st : out) {
    if (__builtin_mul_overflow(st.skip, factor, &st.skip))
      throw std::overflow_error("scaled skip overflows 64 bits");
  }
  return SignedPattern(std::move(out));
}

// ---- parsing ---------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AnyPattern parse() {
    skip_space();
    expect('[');
    std::vector<Step> steps;
    std::optional<bool> signed_form;
    for (;;) {
      skip_space();
      if (at_end()) fail("unterminated pattern");
      if (peek() == ']') break;
      const std::size_t step_pos = pos_;
      int sign = 0;
      if (peek() == '+') {
        sign = 1;
        ++pos_;
      } else if (peek() == '-') {
        sign = -1;
        ++pos_;
      } else if (text_.substr(pos_, 3) == "\xE2\x88\x92") {  // U+2212
        sign = -1;
        pos_ += 3;
      }
      const bool has_sign = sign != 0;
      if (signed_form && *signed_form != has_sign) fail("mixed signed and unsigned steps", step_pos);
      signed_form = has_sign;
      if (has_sign) skip_space();
      steps.push_back({has_sign ? sign : 1, parse_uint()});
    }
    if (steps.empty()) fail("empty pattern");
    ++pos_;
    skip_space();
    if (!at_end()) fail("trailing characters after ']'");
    if (*signed_form) return SignedPattern(std::move(steps));
    std::vector<std::int64_t> skips;
    for (const auto& st : steps) skips.push_back(st.skip);
    return Pattern(std::move(skips));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t parse_uint() {
    const std::size_t begin = pos_;
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(value, 10, &value) ||
          __builtin_add_overflow(value, peek() - '0', &value))
        fail("skip overflows 64 bits", begin);
      ++pos_;
    }
    if (pos_ == begin) fail("expected a skip size");
    if (value == 0) fail("skip sizes must be positive", begin);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw PatternParseError(what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AnyPattern parse_pattern(std::string_view text) { return Parser(text).parse(); }

Pattern parse_unsigned_pattern(std::string_view text) {
  auto p = parse_pattern(text);
  if (auto* u = std::get_if<Pattern>(&p)) return *u;
  throw PatternParseError("expected an unsigned pattern", 0);
}

SignedPattern parse_signed_pattern(std::string_view text) {
  auto p = parse_pattern(text);
  if (auto* s = std::get_if<SignedPattern>(&p)) return *s;
  throw PatternParseError("expected a signed pattern", 0);
}

std::string format_pattern(const Pattern& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
  os << ']';
  return os.str();
}

std::string format_pattern(const SignedPattern& sp) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < sp.size(); ++i)
    os << (i ? " " : "") << (sp[i].sign > 0 ? '+' : '-') << sp[i].skip;
  os << ']';
  return os.str();
}

std::string format_pattern(const AnyPattern& p) {
  return std::visit([](const auto& x) { return format_pattern(x); }, p);
}

// ---- walks -----------------------------------------------------------------

SignInferenceError::SignInferenceError(std::size_t index, std::int64_t term, std::int64_t skip)
    : std::invalid_argument("term " + std::to_string(term) + " is not a multiple of skip " +
                            std::to_string(skip) + " at index " + std::to_string(index)),
      index_(index) {}

SignedPattern infer_signs(const Pattern& p, std::int64_t start) {
  std::vector<Step> steps;
  steps.reserve(p.size());
  std::int64_t term = start;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::int64_t s = p[k];
    if (term < 0 || term % s != 0) throw SignInferenceError(k, term, s);
    const int sign = (term / s) % 2 == 0 ? 1 : -1;
    steps.push_back({sign, s});
    term = checked_add(term, sign * s);
  }
  return SignedPattern(std::move(steps));
}

WalkShape walk_shape(const SignedPattern& sp) {
  const auto off = sp.offsets();
  WalkShape shape;
  shape.closed = off.front() == off.back();
  std::set<std::int64_t> seen;
  const std::size_t distinct_upto = shape.closed ? off.size() - 1 : off.size();
  for (std::size_t i = 0; i < distinct_upto; ++i)
    if (!seen.insert(off[i]).second) shape.repeated_term = true;
  std::set<Arc> arcs;
  for (std::size_t i = 0; i + 1 < off.size(); ++i)
    if (!arcs.insert(Arc::between(off[i], off[i + 1])).second) shape.repeated_arc = true;
  return shape;
}

NegativeTermError::NegativeTermError(std::size_t index)
    : std::invalid_argument("walk reaches a negative term at index " + std::to_string(index)),
      index_(index) {}

Realization realize(const SignedPattern& sp, std::int64_t start) {
  if (start < 0) throw NegativeTermError(0);
  Realization r;
  r.start = start;
  r.pattern = sp;
  r.terms.reserve(sp.size() + 1);
  r.terms.push_back(start);
  for (std::size_t k = 0; k < sp.size(); ++k) {
    const std::int64_t term = r.terms.back();
    const Step& st = sp[k];
    const bool even_multiple = term % st.skip == 0 && (term / st.skip) % 2 == 0;
    const bool odd_multiple = term % st.skip == 0 && (term / st.skip) % 2 == 1;
    if (!r.parity_violation && !(st.sign > 0 ? even_multiple : odd_multiple)) r.parity_violation = k;
    const std::int64_t next = checked_add(term, st.delta());
    if (next < 0) throw NegativeTermError(k + 1);
    r.terms.push_back(next);
    r.arcs.push_back(Arc::between(term, next));
  }
  r.shape = walk_shape(sp);
  return r;
}

}  // namespace hapdisc
