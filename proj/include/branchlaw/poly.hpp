#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branchlaw/cyclotomic.hpp"

namespace branchlaw {

enum class Var { kT = 0, kU = 1, kW = 2 };

inline constexpr std::array<Var, 3> kAllVars = {Var::kT, Var::kU, Var::kW};

char var_name(Var v);
std::optional<Var> parse_var(std::string_view s);

/// Exponents of (t, u, w).
using Monomial = std::array<int, 3>;

inline int total_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

/// Graded lexicographic with t > u > w, largest first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial in t, u, w with cyclotomic coefficients. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Cyclotomic, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Cyclotomic(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly monomial(const Monomial& m, const Cyclotomic& c = Cyclotomic(1));
  static MultiPoly variable(Var v);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Cyclotomic coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Cyclotomic& c);

  int total_degree() const;
  int degree_in(Var v) const;
  /// True if no monomial involves v.
  bool is_free_of(Var v) const { return degree_in(v) <= 0; }

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const Cyclotomic& c) const;
  /// Terms of total degree <= n.
  MultiPoly truncated(int n) const;
  /// Value with v replaced by the constant c.
  MultiPoly substituted(Var v, const Cyclotomic& c) const;
  /// Moves every exponent of `from` onto `to`; `to` must not occur.
  MultiPoly renamed(Var from, Var to) const;
  /// Coefficients in smallest-field form.
  MultiPoly descended() const;
  bool has_rational_coeffs() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Product; splits the work over OpenMP threads for large operands.
MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);
/// Sequential reference for multiply().
MultiPoly multiply_serial(const MultiPoly& a, const MultiPoly& b);
/// Product keeping only terms of total degree <= n.
MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, int n);

/// Dense univariate polynomial in one of t, u, w; coefficients ascending,
/// no trailing zeros (the zero polynomial has none).
struct UniPoly {
  Var var = Var::kT;
  std::vector<Cyclotomic> coeffs;

  UniPoly() = default;
  UniPoly(Var v, std::vector<Cyclotomic> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Cyclotomic operator()(const Cyclotomic& x) const;
  MultiPoly to_multipoly() const;
  UniPoly descended() const;
  std::string to_string() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b);
  /// Total order: variable, degree, then coefficients (Cyclotomic::compare).
  static int compare(const UniPoly& a, const UniPoly& b);
};

UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& a, int n);
/// Quotient and remainder of a by b (b nonzero, same variable).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// a / b when the division is exact.
std::optional<UniPoly> divide_exact(const UniPoly& a, const UniPoly& b);
/// First n+1 coefficients of 1/f; f(0) must be nonzero.
std::vector<Cyclotomic> inverse_series(const UniPoly& f, int n);
/// a / f for a univariate f, when every slice of a in f's variable is
/// divisible by f.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const UniPoly& f);
/// Phi_d(x) scaled to constant term 1 (so Phi_1 becomes 1 - x).
UniPoly cyclotomic_factor(long d, Var v);
/// 1 - a*x.
UniPoly linear_factor(const Cyclotomic& a, Var v);

/// Product of univariate factors with constant term 1, each with a positive
/// multiplicity. Kept sorted by UniPoly::compare with equal factors merged.
class FactoredDen {
 public:
  struct Factor {
    UniPoly poly;
    int mult = 1;
  };

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  /// Multiplies by poly^mult. Throws ArithmeticError unless poly has
  /// constant term 1 and positive degree.
  void multiply(const UniPoly& poly, int mult = 1);
  int multiplicity(const UniPoly& poly) const;

  friend FactoredDen operator*(const FactoredDen& a, const FactoredDen& b);
  /// Factor-multiset lcm: each factor at its larger multiplicity.
  static FactoredDen lcm(const FactoredDen& a, const FactoredDen& b);
  /// Multiset difference; `sub` must be contained in *this.
  FactoredDen divided(const FactoredDen& sub) const;

  MultiPoly expanded() const;
  /// Product of the factors in variable v (1 if none).
  UniPoly expanded_in(Var v) const;
  int degree_in(Var v) const;
  std::string to_string() const;

  friend bool operator==(const FactoredDen& a, const FactoredDen& b);

 private:
  std::vector<Factor> factors_;
};

/// num / den with den a product of univariate factors, so that the value is a
/// well-defined power series.
class RatFun {
 public:
  RatFun() = default;
  RatFun(MultiPoly num, FactoredDen den = {});  // NOLINT(google-explicit-constructor)

  const MultiPoly& num() const noexcept { return num_; }
  const FactoredDen& den() const noexcept { return den_; }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  RatFun operator-() const;
  RatFun scaled(const Cyclotomic& c) const;

  /// Divides out every denominator factor that divides the numerator exactly.
  RatFun cancelled() const;
  /// Taylor coefficients of total degree <= n.
  MultiPoly series(int n) const;
  RatFun substituted(Var v, const Cyclotomic& c) const;
  RatFun renamed(Var from, Var to) const;
  RatFun descended() const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  FactoredDen den_;
};

/// Exact equality of rational functions by cross-multiplication.
bool equal(const RatFun& a, const RatFun& b);

}  // namespace branchlaw
