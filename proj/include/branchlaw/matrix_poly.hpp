#pragma once

#include <map>

#include "branchlaw/poly.hpp"
#include "branchlaw/tensor.hpp"

namespace branchlaw {

/// Polynomial in t, u, w whose coefficients are square integer matrices.
struct MatrixPoly {
  std::size_t n = 0;
  std::map<Monomial, IntMatrix, MonomialOrder> terms;

  explicit MatrixPoly(std::size_t size = 0) : n(size) {}

  static IntMatrix identity(std::size_t n);

  /// Adds p * a. Throws ArithmeticError if p has a non-integer coefficient.
  void add(const MultiPoly& p, const IntMatrix& a);
  /// Adds c * x^m * a.
  void add_term(const Monomial& m, long c, const IntMatrix& a);

  /// Column j as a vector of polynomials.
  std::vector<MultiPoly> column(std::size_t j) const;

  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
};

}  // namespace branchlaw
