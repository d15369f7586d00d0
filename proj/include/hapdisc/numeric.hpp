#pragma once

// Exact integer helpers: 2-adic classes, gcd, and a CRT solver that accepts
// moduli which are not pairwise coprime.

#include <cstdint>
#include <optional>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace hapdisc {

using Integer = boost::multiprecision::cpp_int;

/// Number of factors of 2 in n. Throws std::invalid_argument for n <= 0.
int two_adic_valuation(std::int64_t n);
int two_adic_valuation(const Integer& n);

/// The 2-class of a positive integer. Odd numbers form the lowest class.
struct TwoClass {
  int valuation = 0;

  static TwoClass of(std::int64_t n) { return TwoClass{two_adic_valuation(n)}; }

  friend auto operator<=>(const TwoClass&, const TwoClass&) = default;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;
  Integer x;
  Integer y;  // a*x + b*y == g
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Least nonnegative representative of a mod m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

/// x == residue (mod modulus), normalized so that 0 <= residue < modulus.
struct Congruence {
  Integer residue;
  Integer modulus;

  Congruence() : residue(0), modulus(1) {}
  Congruence(Integer r, Integer m);

  bool contains(const Integer& x) const { return mod_floor(x - residue, modulus) == 0; }

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Merge two congruences. Returns nullopt when gcd(m1, m2) does not divide
/// the residue difference.
std::optional<Congruence> crt_merge(const Congruence& lhs, const Congruence& rhs);

/// Solve a system of congruences with arbitrary moduli. The merged
/// congruence is modulo the lcm of all moduli. Throws std::invalid_argument
/// on an empty system.
std::optional<Congruence> crt_solve(std::span<const Congruence> system);

}  // namespace hapdisc
