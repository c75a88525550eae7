#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "branchlaw/rational.hpp"

namespace branchlaw {

namespace detail {

/// Immutable per-order data: m, phi(m) and the monic integer polynomial Phi_m.
/// Instances are created once per order and never freed.
struct CyclotomicField {
  long order;
  long degree;
  std::vector<Integer> modulus;          // Phi_m, ascending, length degree+1
  std::vector<std::size_t> modulus_nz;   // indices i < degree with modulus[i] != 0

  /// Reduces an integer polynomial (ascending coefficients, any length) modulo
  /// Phi_m in place; the result has exactly `degree` entries.
  void reduce(std::vector<Integer>& poly) const;
};

const CyclotomicField& field(long order);

}  // namespace detail

long euler_phi(long m);
/// Coefficients of the m-th cyclotomic polynomial, ascending.
std::vector<Integer> cyclotomic_polynomial(long m);

/// Exact element of Q(zeta_m), stored in the power basis zeta^0..zeta^{phi(m)-1}
/// as integer numerators over one positive common denominator. The
/// representation is canonical per order: gcd(content, den) = 1.
///
/// Mixed-order operands are lifted to the lcm of their orders. Elements of
/// order 1 (rationals) are combined without lifting. Nothing descends to a
/// smaller order unless descended() or lowered() is called.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// E(m)^k.
  static Cyclotomic root_of_unity(long m, long k = 1);
  /// Element with the given basis coefficients at order m (length phi(m)).
  static Cyclotomic from_coeffs(long m, std::span<const Rational> coeffs);

  long order() const noexcept { return field_->order; }
  long degree() const noexcept { return field_->degree; }
  std::vector<Rational> coeffs() const;
  Rational coeff(std::size_t i) const;

  bool is_zero() const noexcept;
  bool is_one() const;
  /// True if every basis coefficient beyond zeta^0 vanishes.
  bool is_rational() const noexcept;
  std::optional<Rational> as_rational() const;

  /// Same value represented at `order`, which must be a multiple of order().
  Cyclotomic lifted(long order) const;
  /// Same value at a divisor `order` of order(), if it lies in that subfield.
  std::optional<Cyclotomic> lowered(long order) const;
  /// Same value at the smallest order whose field contains it.
  Cyclotomic descended() const;

  /// Galois automorphism zeta -> zeta^k, gcd(k, m) = 1.
  Cyclotomic galois(long k) const;
  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conjugate() const { return galois(order() - 1); }
  Cyclotomic inverse() const;
  Cyclotomic pow(long n) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  /// Value equality, independent of the stored order.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Lexicographic comparison of coefficient vectors at the common order.
  /// A total order on values used for canonical sorting, not a field order.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Hash of the stored representation. Only consistent with == between
  /// elements stored at the same order.
  std::size_t hash() const noexcept;

  /// Rendering in the scalar-literal grammar, e.g. "-1/2*E(5)^2+E(5)^3".
  std::string to_string() const;
  /// Floating-point value; for sanity cross-checks only.
  std::complex<double> to_complex() const;

 private:
  Cyclotomic(const detail::CyclotomicField* f, std::vector<Integer> num, Integer den);
  void normalize();
  void scale(const Rational& q);
  static Cyclotomic lift_to(const Cyclotomic& a, long order);

  const detail::CyclotomicField* field_;
  std::vector<Integer> num_;
  Integer den_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.to_string();
}

enum class ArithOp { kAdd, kSub, kMul, kDiv };

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op);
inline Cyclotomic conjugate(const Cyclotomic& a) { return a.conjugate(); }
inline std::optional<Rational> as_rational(const Cyclotomic& a) { return a.as_rational(); }

/// Positive real square root of a squarefree n >= 1, built from quadratic
/// Gauss sums.
Cyclotomic sqrt_integer(long n);

}  // namespace branchlaw
