#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace branchlaw {

using Integer = mpz_class;
/// mpq_class keeps numerator/denominator coprime with a positive denominator
/// as long as every constructor path calls canonicalize(); see make_rational.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Value as an integer if the rational has denominator 1.
inline std::optional<Integer> as_integer(const Rational& q) {
  if (q.get_den() != 1) return std::nullopt;
  return q.get_num();
}

/// Hash of an arbitrary-precision integer that is stable across runs.
std::size_t hash_value(const Integer& z) noexcept;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
long lcm(long a, long b);

}  // namespace branchlaw
