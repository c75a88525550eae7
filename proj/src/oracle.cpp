#include "branchlaw/oracle.hpp"

#include <algorithm>

#include "branchlaw/branching.hpp"
#include "branchlaw/error.hpp"
#include "branchlaw/matrix_poly.hpp"
#include "branchlaw/parallel.hpp"

namespace branchlaw {

namespace {

using Vec = std::vector<long>;

Vec mat_vec(const IntMatrix& a, const Vec& v) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

void subtract(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

Cyclotomic det(std::vector<std::vector<Cyclotomic>> a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Cyclotomic out(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Cyclotomic>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Cyclotomic> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const Cyclotomic term = a[0][c] * det(std::move(minor));
    if (c % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

std::string triple_string(const Monomial& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
}

MultiplicityTable schur_table_impl(const CharacterTable& t, const GroupData& g, int n, bool parallel) {
  const auto h = complete_symmetric(g, n + 3);
  const auto triples = triples_up_to(n);
  std::vector<std::vector<long>> rows(triples.size());
  auto body = [&](std::size_t k) {
    const auto& [p, q, r] = triples[k];
    const auto psi = schur_character(h, p, q, r);
    const auto mult = decompose(t, psi);
    rows[k].resize(mult.size());
    for (std::size_t i = 0; i < mult.size(); ++i) {
      const auto x = mult[i].as_rational();
      if (!x || x->get_den() != 1 || *x < 0 || !x->get_num().fits_slong_p()) {
        throw PipelineError("Schur multiplicity of chi_" + std::to_string(i) + " at " + triple_string(triples[k]) +
                            " is " + mult[i].to_string());
      }
      rows[k][i] = x->get_num().get_si();
    }
  };
  if (parallel) {
    parallel_for(triples.size(), body);
  } else {
    for (std::size_t k = 0; k < triples.size(); ++k) body(k);
  }
  MultiplicityTable out;
  out.max_degree = n;
  out.method = "schur_character";
  for (std::size_t k = 0; k < triples.size(); ++k) out.values.emplace(triples[k], std::move(rows[k]));
  return out;
}

}  // namespace

std::vector<Monomial> triples_up_to(int n) {
  std::vector<Monomial> out;
  for (int level = 0; level <= n; ++level) {
    for (int p = level; p >= 0; --p) {
      for (int q = level - p; q >= 0; --q) out.push_back(Monomial{p, q, level - p - q});
    }
  }
  return out;
}

std::vector<Monomial> table_mismatches(const MultiplicityTable& a, const MultiplicityTable& b, int n) {
  std::vector<Monomial> out;
  for (const Monomial& m : triples_up_to(n)) {
    const auto ia = a.values.find(m);
    const auto ib = b.values.find(m);
    if (ia == a.values.end() || ib == b.values.end() || ia->second != ib->second) out.push_back(m);
  }
  return out;
}

long weyl_dim(long p, long q, long r) {
  if (p < 0 || q < 0 || r < 0) return 0;
  return (p + 1) * (q + 1) * (r + 1) * (p + q + 2) * (q + r + 2) * (p + q + r + 3) / 12;
}

MultiplicityTable cg_table(const TensorMatrices& m, int n) {
  const std::size_t size = m.size();
  MultiplicityTable out;
  out.max_degree = n;
  out.method = "cg_recurrence";
  const Vec zero(size, 0);
  auto get = [&](int p, int q, int r) -> const Vec& {
    if (p < 0 || q < 0 || r < 0) return zero;
    return out.values.at(Monomial{p, q, r});
  };
  auto put = [&](int p, int q, int r, Vec v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) {
        throw PipelineError("recurrence gives a negative multiplicity " + std::to_string(v[i]) + " for chi_" +
                            std::to_string(i) + " at " + triple_string(Monomial{p, q, r}));
      }
    }
    out.values[Monomial{p, q, r}] = std::move(v);
  };

  Vec e0 = zero;
  e0.at(0) = 1;
  put(0, 0, 0, e0);
  for (int level = 0; level < n; ++level) {
    const int next = level + 1;
    // p >= 1: A1 at (p-1, q, r).
    for (int p = next; p >= 1; --p) {
      for (int q = next - p; q >= 0; --q) {
        const int r = next - p - q;
        Vec v = mat_vec(m.a1, get(p - 1, q, r));
        subtract(v, get(p - 1, q, r - 1));
        subtract(v, get(p - 2, q + 1, r));
        subtract(v, get(p - 1, q - 1, r + 1));
        put(p, q, r, std::move(v));
      }
    }
    // p = 0, r >= 1: A3 at (0, q, r-1).
    for (int r = next; r >= 1; --r) {
      const int q = next - r;
      Vec v = mat_vec(m.a3, get(0, q, r - 1));
      subtract(v, get(0, q + 1, r - 2));
      subtract(v, get(1, q - 1, r - 1));
      put(0, q, r, std::move(v));
    }
    // (0, next, 0): A2 at (0, level, 0); uses (1, level-1, 1) from this level.
    Vec v = mat_vec(m.a2, get(0, level, 0));
    subtract(v, get(0, level - 1, 0));
    subtract(v, get(1, level - 1, 1));
    put(0, next, 0, std::move(v));
  }
  return out;
}

std::vector<std::vector<Cyclotomic>> complete_symmetric(const GroupData& g, int kmax) {
  const auto chi = natural_character(g);
  const auto ext = exterior_square_character(g, chi);
  std::vector<std::vector<Cyclotomic>> h(g.num_classes());
  for (std::size_t j = 0; j < g.num_classes(); ++j) {
    // Elementary symmetric functions of the eigenvalues; e4 = det = 1.
    const Cyclotomic e1 = chi[j];
    const Cyclotomic e2 = ext[j];
    const Cyclotomic e3 = chi[j].conjugate();
    auto& hj = h[j];
    hj.assign(static_cast<std::size_t>(kmax) + 1, Cyclotomic(0));
    hj[0] = Cyclotomic(1);
    auto at = [&](int k) { return k < 0 ? Cyclotomic(0) : hj[k]; };
    for (int k = 1; k <= kmax; ++k) hj[k] = e1 * at(k - 1) - e2 * at(k - 2) + e3 * at(k - 3) - at(k - 4);
  }
  return h;
}

std::vector<Cyclotomic> schur_character(const std::vector<std::vector<Cyclotomic>>& h, int p, int q, int r) {
  const int lambda[4] = {p + q + r, q + r, r, 0};
  std::vector<Cyclotomic> out;
  for (const auto& hj : h) {
    if (static_cast<int>(hj.size()) <= p + q + r + 3) throw PipelineError("complete symmetric table too short");
    std::vector<std::vector<Cyclotomic>> jt(4, std::vector<Cyclotomic>(4));
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const int k = lambda[a] - a + b;
        jt[a][b] = k < 0 ? Cyclotomic(0) : hj[k];
      }
    }
    out.push_back(det(std::move(jt)).descended());
  }
  return out;
}

MultiplicityTable schur_table(const CharacterTable& t, const GroupData& g, int n) {
  return schur_table_impl(t, g, n, true);
}

MultiplicityTable schur_table_serial(const CharacterTable& t, const GroupData& g, int n) {
  return schur_table_impl(t, g, n, false);
}

std::size_t KeyRelationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const Entry& e) { return !e.passed; }));
}

KeyRelationReport key_relation_check(const TensorMatrices& m, const MultiplicityTable& table, int n) {
  const std::size_t size = m.size();
  const IntMatrix id = MatrixPoly::identity(size);

  MatrixPoly qt(size);
  qt.add_term({0, 0, 0}, 1, id);
  qt.add_term({1, 0, 0}, -1, m.a1);
  qt.add_term({2, 0, 0}, 1, m.a2);
  qt.add_term({3, 0, 0}, -1, m.a3);
  qt.add_term({4, 0, 0}, 1, id);
  MatrixPoly qw(size);
  qw.add_term({0, 0, 0}, 1, id);
  qw.add_term({0, 0, 1}, -1, m.a3);
  qw.add_term({0, 0, 2}, 1, m.a2);
  qw.add_term({0, 0, 3}, -1, m.a1);
  qw.add_term({0, 0, 4}, 1, id);
  // (1+u^2)(1-u^2)^2 = 1 - u^2 - u^4 + u^6 and u(1-u^2)^2 = u - 2u^3 + u^5.
  MatrixPoly su(size);
  for (const auto& [e, c] : {std::pair{0, 1L}, {2, -1L}, {4, -1L}, {6, 1L}}) su.add_term({0, e, 0}, c, id);
  for (const auto& [e, c] : {std::pair{1, -1L}, {3, 2L}, {5, -1L}}) su.add_term({0, e, 0}, c, m.a2);
  MatrixPoly b1(size);
  b1.add_term({0, 0, 0}, 1, m.a1);
  b1.add_term({0, 1, 0}, -1, m.a3);
  MatrixPoly b2(size);
  b2.add_term({0, 0, 0}, 1, m.a3);
  b2.add_term({0, 1, 0}, -1, m.a1);
  MatrixPoly u2(size);
  u2.add_term({0, 2, 0}, 1, id);
  for (const auto& [mono, a] : (u2 * b1 * b2).terms) su.add_term(mono, 1, a);
  const MatrixPoly k = qt * qw * su;

  const MatrixPoly j = build_J(m);
  KeyRelationReport report;
  report.max_degree = n;
  for (const Monomial& mu : triples_up_to(n)) {
    Vec lhs(size, 0);
    if (const auto it = j.terms.find(mu); it != j.terms.end()) {
      for (std::size_t i = 0; i < size; ++i) lhs[i] = it->second[i][0];
    }
    Vec rhs(size, 0);
    for (const auto& [kappa, a] : k.terms) {
      const Monomial rest{mu[0] - kappa[0], mu[1] - kappa[1], mu[2] - kappa[2]};
      if (rest[0] < 0 || rest[1] < 0 || rest[2] < 0) continue;
      const Vec term = mat_vec(a, table.values.at(rest));
      for (std::size_t i = 0; i < size; ++i) rhs[i] += term[i];
    }
    KeyRelationReport::Entry entry{mu, true, 0};
    for (std::size_t i = 0; i < size; ++i) {
      if (lhs[i] != rhs[i]) {
        entry.passed = false;
        entry.coordinate = i;
        break;
      }
    }
    report.entries.push_back(entry);
  }
  return report;
}

Check check_conservation(const MultiplicityTable& table, const std::vector<long>& degrees) {
  for (const auto& [mono, v] : table.values) {
    long total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) total += v[i] * degrees.at(i);
    const long expected = weyl_dim(mono[0], mono[1], mono[2]);
    if (total != expected) {
      return {"dimension conservation (" + table.method + ")", false,
              "at " + triple_string(mono) + ": sum m_i deg_i = " + std::to_string(total) + ", weyl_dim = " +
                  std::to_string(expected)};
    }
  }
  return {"dimension conservation (" + table.method + ")", true,
          std::to_string(table.values.size()) + " triples"};
}

CheckList check_tensor_rule_dimensions(int bound) {
  CheckList out;
  bool ok1 = true;
  bool ok2 = true;
  bool ok3 = true;
  for (long p = 0; p <= bound; ++p) {
    for (long q = 0; q <= bound; ++q) {
      for (long r = 0; r <= bound; ++r) {
        const long d = weyl_dim(p, q, r);
        ok1 = ok1 && 4 * d == weyl_dim(p + 1, q, r) + weyl_dim(p, q, r - 1) + weyl_dim(p - 1, q + 1, r) +
                                  weyl_dim(p, q - 1, r + 1);
        ok2 = ok2 && 6 * d == weyl_dim(p, q + 1, r) + weyl_dim(p, q - 1, r) + weyl_dim(p + 1, q - 1, r + 1) +
                                  weyl_dim(p - 1, q + 1, r - 1) + weyl_dim(p - 1, q, r + 1) +
                                  weyl_dim(p + 1, q, r - 1);
        ok3 = ok3 && 4 * d == weyl_dim(p, q, r + 1) + weyl_dim(p - 1, q, r) + weyl_dim(p, q + 1, r - 1) +
                                  weyl_dim(p + 1, q - 1, r);
      }
    }
  }
  out.add("dimensions of (1,0,0) x (p,q,r)", ok1);
  out.add("dimensions of (0,1,0) x (p,q,r)", ok2);
  out.add("dimensions of (0,0,1) x (p,q,r)", ok3);
  return out;
}

}  // namespace branchlaw
