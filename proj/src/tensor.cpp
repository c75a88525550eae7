#include "branchlaw/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "branchlaw/error.hpp"
#include "branchlaw/parallel.hpp"

namespace branchlaw {

namespace {

const char* kNames[] = {"A1", "A2", "A3"};

long to_multiplicity(const Cyclotomic& v, const char* name, std::size_t i, std::size_t j) {
  const auto q = v.as_rational();
  if (!q || q->get_den() != 1 || *q < 0 || !q->get_num().fits_slong_p()) {
    throw PipelineError(std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + v.to_string() + " is not a non-negative integer");
  }
  return q->get_num().get_si();
}

}  // namespace

TensorMatrices build_tensor_matrices(const CharacterTable& t, const GroupData& g) {
  const std::size_t n = t.size();
  if (n != g.num_classes()) throw PipelineError("character table and group disagree on the class count");
  TensorMatrices m;
  m.l3 = natural_character(g);
  m.l2 = exterior_square_character(g, m.l3);
  for (const auto& c : m.l3) m.l1.push_back(c.conjugate().descended());

  const Cyclotomic inv_order(make_rational(1, static_cast<long>(g.order())));
  // weight_k = |C_k| psi(g_k) / |G| for psi in (chi, ext, conj chi)
  std::vector<std::vector<Cyclotomic>> weight(3, std::vector<Cyclotomic>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Cyclotomic size_k = Cyclotomic(static_cast<long>(g.class_size(k))) * inv_order;
    weight[0][k] = size_k * m.l3[k];
    weight[1][k] = size_k * m.l2[k];
    weight[2][k] = size_k * m.l1[k];
  }
  std::vector<IntMatrix> mats(3, IntMatrix(n, std::vector<long>(n, 0)));
  parallel_for(n, [&](std::size_t i) {
    std::vector<Cyclotomic> conj_row(n);
    for (std::size_t k = 0; k < n; ++k) conj_row[k] = t(i, k).conjugate();
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t which = 0; which < 3; ++which) {
        Cyclotomic s(0);
        for (std::size_t k = 0; k < n; ++k) s += weight[which][k] * conj_row[k] * t(j, k);
        mats[which][i][j] = to_multiplicity(s, kNames[which], i, j);
      }
    }
  });
  m.a1 = std::move(mats[0]);
  m.a2 = std::move(mats[1]);
  m.a3 = std::move(mats[2]);
  return m;
}

IntMatrix transpose(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[j][i] = a[i][j];
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

long rank(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : a) {
    std::vector<Rational> r;
    for (long v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  if (m.empty()) return 0;
  const std::size_t ncols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < ncols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return static_cast<long>(r);
}

CheckList check_tensor_structure(const TensorMatrices& m, const CharacterTable& t) {
  CheckList out;
  const std::size_t n = m.size();
  out.add("A3 = transpose(A1)", m.a3 == transpose(m.a1));
  out.add("A2 symmetric", m.a2 == transpose(m.a2));
  out.add("A1 A2 = A2 A1", multiply(m.a1, m.a2) == multiply(m.a2, m.a1));
  out.add("A1 A3 = A3 A1", multiply(m.a1, m.a3) == multiply(m.a3, m.a1));
  out.add("A2 A3 = A3 A2", multiply(m.a2, m.a3) == multiply(m.a3, m.a2));

  const IntMatrix* mats[] = {&m.a1, &m.a2, &m.a3};
  const std::vector<Cyclotomic>* eig[] = {&m.l1, &m.l2, &m.l3};
  for (std::size_t which = 0; which < 3; ++which) {
    bool ok = true;
    std::string detail;
    for (std::size_t j = 0; j < n && ok; ++j) {
      const auto w = t.column(j);
      for (std::size_t i = 0; i < n; ++i) {
        Cyclotomic lhs(0);
        for (std::size_t k = 0; k < n; ++k) {
          const long a = (*mats[which])[i][k];
          if (a != 0) lhs += Cyclotomic(a) * w[k];
        }
        if (!(lhs == (*eig[which])[j] * w[i])) {
          ok = false;
          detail = "column " + std::to_string(j) + " fails at row " + std::to_string(i);
          break;
        }
      }
    }
    out.add(std::string("character-table columns are eigenvectors of ") + kNames[which], ok, detail);
  }

  const auto gamma = decompose(t, m.l3);
  const auto gamma_dual = decompose(t, m.l1);
  bool col_ok = true;
  bool row_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    col_ok = col_ok && gamma[i] == Cyclotomic(m.a1[i][0]);
    row_ok = row_ok && gamma_dual[i] == Cyclotomic(m.a1[0][i]);
  }
  out.add("column 0 of A1 decomposes gamma", col_ok);
  out.add("row 0 of A1 decomposes the dual of gamma", row_ok);
  return out;
}

std::string mckay_graph_dot(const TensorMatrices& m) {
  std::ostringstream os;
  os << "digraph mckay {\n";
  for (std::size_t i = 0; i < m.size(); ++i) os << "  " << i << ";\n";
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (long e = 0; e < m.a1[i][j]; ++e) os << "  " << j << " -> " << i << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string format_matrix(const IntMatrix& a) {
  std::size_t width = 1;
  for (const auto& row : a) {
    for (long v : row) width = std::max(width, std::to_string(v).size());
  }
  std::ostringstream os;
  for (const auto& row : a) {
    os << "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string s = std::to_string(row[j]);
      os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
  return os.str();
}

std::optional<std::vector<std::size_t>> find_relabeling(
    const std::vector<std::pair<const IntMatrix*, const IntMatrix*>>& pairs) {
  if (pairs.empty()) return std::nullopt;
  const std::size_t n = pairs.front().first->size();
  if (n > 8) return std::nullopt;
  for (const auto& [computed, expected] : pairs) {
    if (computed->size() != n || expected->size() != n) return std::nullopt;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [computed, expected] : pairs) {
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) ok = (*computed)[perm[i]][perm[j]] == (*expected)[i][j];
      }
      if (!ok) break;
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace branchlaw
