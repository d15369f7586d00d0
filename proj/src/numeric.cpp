#include "hapdisc/numeric.hpp"

#include <bit>
#include <stdexcept>

namespace hapdisc {

int two_adic_valuation(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("two_adic_valuation: argument must be positive");
  return std::countr_zero(static_cast<std::uint64_t>(n));
}

int two_adic_valuation(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("two_adic_valuation: argument must be positive");
  return static_cast<int>(boost::multiprecision::lsb(n));
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer r = a / gcd(a, b) * b;
  return r < 0 ? Integer(-r) : r;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Congruence::Congruence(Integer r, Integer m) : residue(std::move(r)), modulus(std::move(m)) {
  if (modulus <= 0) throw std::invalid_argument("Congruence: modulus must be positive");
  residue = mod_floor(residue, modulus);
}

std::optional<Congruence> crt_merge(const Congruence& lhs, const Congruence& rhs) {
  const ExtendedGcd eg = extended_gcd(lhs.modulus, rhs.modulus);
  const Integer& g = eg.g;
  const Integer& p = eg.x;
  const Integer diff = rhs.residue - lhs.residue;
  if (diff % g != 0) return std::nullopt;
  // lhs.modulus * p == g (mod rhs.modulus), so stepping by lhs.modulus * k
  // with k = p * diff / g lands on rhs.residue.
  const Integer m2g = rhs.modulus / g;
  const Integer k = mod_floor(p * (diff / g), m2g);
  const Integer merged_modulus = lhs.modulus * m2g;
  return Congruence(lhs.residue + lhs.modulus * k, merged_modulus);
}

std::optional<Congruence> crt_solve(std::span<const Congruence> system) {
  if (system.empty()) throw std::invalid_argument("crt_solve: empty system");
  Congruence acc = system.front();
  for (const auto& c : system.subspan(1)) {
    auto merged = crt_merge(acc, c);
    if (!merged) return std::nullopt;
    acc = std::move(*merged);
  }
  return acc;
}

}  // namespace hapdisc
