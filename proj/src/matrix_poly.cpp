#include "branchlaw/matrix_poly.hpp"

#include "branchlaw/error.hpp"

namespace branchlaw {

IntMatrix MatrixPoly::identity(std::size_t n) {
  IntMatrix out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

void MatrixPoly::add_term(const Monomial& m, long c, const IntMatrix& a) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, IntMatrix(n, std::vector<long>(n, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) it->second[i][j] += c * a[i][j];
  }
  for (const auto& row : it->second) {
    for (long v : row) {
      if (v != 0) return;
    }
  }
  terms.erase(it);
}

void MatrixPoly::add(const MultiPoly& p, const IntMatrix& a) {
  for (const auto& [m, c] : p.terms()) {
    const auto q = c.as_rational();
    if (!q || q->get_den() != 1 || !q->get_num().fits_slong_p()) {
      throw ArithmeticError("matrix polynomial coefficient " + c.to_string() + " is not an integer");
    }
    add_term(m, q->get_num().get_si(), a);
  }
}

std::vector<MultiPoly> MatrixPoly::column(std::size_t j) const {
  std::vector<MultiPoly> out(n);
  for (const auto& [m, a] : terms) {
    for (std::size_t i = 0; i < n; ++i) out[i].add_term(m, Cyclotomic(a[i][j]));
  }
  return out;
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
  MatrixPoly out(a.n);
  for (const auto& [ma, xa] : a.terms) {
    for (const auto& [mb, xb] : b.terms) {
      const Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      out.add_term(m, 1, multiply(xa, xb));
    }
  }
  return out;
}

}  // namespace branchlaw
