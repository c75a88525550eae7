// Burnside-Dixon character table computation.
//
// The normalized central characters omega_chi(C_k) = |C_k| chi(g_k) / chi(1)
// form the common eigenvectors of the class matrices M_i, (M_i)_{jk} =
// c_{ijk}. Over F_p with p = 1 (mod exponent) those eigenvectors split the
// whole space into lines; each line yields chi mod p, and the eigenvalue
// multiplicities of every g_k recover chi(g_k) as a sum of roots of unity.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "branchlaw/character_table.hpp"
#include "branchlaw/error.hpp"

namespace branchlaw {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

class ModP {
 public:
  explicit ModP(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p_ == 0) throw TableError("internal: inverting zero mod p");
    return pow(a, p_ - 2);
  }
  u64 from_long(long v) const {
    const long m = static_cast<long>(p_);
    return static_cast<u64>(((v % m) + m) % m);
  }

 private:
  u64 p_;
};

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 primitive_root(const ModP& f) {
  const u64 p = f.p();
  std::vector<u64> factors;
  u64 n = p - 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  for (u64 r = 2; r < p; ++r) {
    bool ok = true;
    for (u64 q : factors) {
      if (f.pow(r, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  throw TableError("internal: no primitive root");
}

// Row-reduced echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const ModP& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of the right nullspace {x : A x = 0}.
Mat nullspace(Mat a, const ModP& f) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const auto pivots = rref(a, f);
  Mat basis;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Characteristic polynomial det(x I - R), ascending, by Faddeev-LeVerrier.
Vec charpoly(const Mat& r, const ModP& f) {
  const std::size_t d = r.size();
  Vec c(d + 1, 0);
  c[d] = 1;
  Mat m(d, Vec(d, 0));
  for (std::size_t k = 1; k <= d; ++k) {
    // m <- R m + c_{d-k+1} I
    Mat next(d, Vec(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        u64 s = 0;
        for (std::size_t l = 0; l < d; ++l) s = f.add(s, f.mul(r[i][l], m[l][j]));
        next[i][j] = s;
      }
      next[i][i] = f.add(next[i][i], c[d - k + 1]);
    }
    m = std::move(next);
    u64 tr = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t l = 0; l < d; ++l) tr = f.add(tr, f.mul(r[i][l], m[l][i]));
    }
    c[d - k] = f.sub(0, f.mul(tr, f.inv(k)));
  }
  return c;
}

u64 eval_poly(const Vec& c, u64 x, const ModP& f) {
  u64 acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
  return acc;
}

struct Space {
  Mat basis;  // RREF rows
  std::vector<std::size_t> pivots;
};

// Splits `space` into eigenspaces of the class matrix m.
std::vector<Space> split(const Space& space, const Mat& m, const ModP& f) {
  const std::size_t d = space.basis.size();
  const std::size_t n = m.size();
  Mat images(d, Vec(n, 0));
  Mat restricted(d, Vec(d, 0));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      u64 s = 0;
      for (std::size_t k = 0; k < n; ++k) s = f.add(s, f.mul(m[j][k], space.basis[r][k]));
      images[r][j] = s;
    }
    for (std::size_t s = 0; s < d; ++s) restricted[s][r] = images[r][space.pivots[s]];
    for (std::size_t j = 0; j < n; ++j) {
      u64 expect = 0;
      for (std::size_t s = 0; s < d; ++s) expect = f.add(expect, f.mul(restricted[s][r], space.basis[s][j]));
      if (expect != images[r][j]) throw TableError("internal: subspace not invariant under a class matrix");
    }
  }
  const Vec cp = charpoly(restricted, f);
  std::vector<Space> parts;
  std::size_t total = 0;
  for (u64 lambda = 0; lambda < f.p(); ++lambda) {
    if (eval_poly(cp, lambda, f) != 0) continue;
    Mat shifted = restricted;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    Mat coords = nullspace(shifted, f);
    Space part;
    for (const auto& c : coords) {
      Vec v(n, 0);
      for (std::size_t s = 0; s < d; ++s) {
        if (c[s] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(c[s], space.basis[s][j]));
      }
      part.basis.push_back(std::move(v));
    }
    part.pivots = rref(part.basis, f);
    total += part.basis.size();
    parts.push_back(std::move(part));
  }
  if (total != d) throw TableError("internal: class matrix not diagonalizable mod p");
  return parts;
}

}  // namespace

long dixon_prime(const GroupData& g) {
  const long e = g.exponent();
  const long lower = 2 * isqrt(static_cast<long>(g.order()));
  constexpr long kSearchLimit = 1L << 31;
  for (long p = e + 1; p < kSearchLimit; p += e) {
    if (p > lower && is_prime(p)) return p;
  }
  throw TableError("no prime p = 1 mod " + std::to_string(e) + " below 2^31");
}

CharacterTable dixon_character_table(const GroupData& g) {
  const std::size_t n = g.num_classes();
  const long group_order = static_cast<long>(g.order());
  const ModP f(static_cast<u64>(dixon_prime(g)));
  const auto coeffs = all_class_mult_coeffs(g);

  std::vector<Mat> class_mats(n, Mat(n, Vec(n, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) class_mats[i][j][k] = f.from_long(coeffs[i][j][k]);
    }
  }

  Space whole;
  for (std::size_t j = 0; j < n; ++j) {
    Vec v(n, 0);
    v[j] = 1;
    whole.basis.push_back(std::move(v));
  }
  whole.pivots = rref(whole.basis, f);
  std::vector<Space> spaces{whole};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, class_mats[i], f)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces) {
    if (s.basis.size() != 1) throw TableError("internal: class matrices failed to separate characters");
  }
  if (spaces.size() != n) throw TableError("internal: wrong number of characters");

  std::vector<std::size_t> inverse_class(n);
  for (std::size_t k = 0; k < n; ++k) inverse_class[k] = g.class_of(g.inverse_of(g.class_rep(k)));

  const long e = g.exponent();
  const u64 z = f.pow(primitive_root(f), (f.p() - 1) / static_cast<u64>(e));
  const long max_degree = isqrt(group_order);

  CharacterTable t;
  t.group_order = g.order();
  t.class_sizes = g.class_sizes();
  t.class_orders = g.class_element_orders();
  for (const auto& s : spaces) {
    Vec omega = s.basis[0];
    if (omega[0] == 0) throw TableError("internal: eigenvector vanishes on the identity class");
    const u64 scale = f.inv(omega[0]);
    for (auto& v : omega) v = f.mul(v, scale);

    // chi(1)^2 = |G| / sum_k omega_k omega_{k'} / |C_k|
    u64 sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      sum = f.add(sum, f.mul(f.mul(omega[k], omega[inverse_class[k]]), f.inv(g.class_size(k))));
    }
    const u64 d2 = f.mul(f.from_long(group_order), f.inv(sum));
    long degree = 0;
    for (long d = 1; d <= max_degree; ++d) {
      if (f.from_long(d * d) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw TableError("internal: no character degree matches mod p");

    Vec chi_mod(n);
    for (std::size_t k = 0; k < n; ++k) {
      chi_mod[k] = f.mul(f.mul(f.from_long(degree), omega[k]), f.inv(g.class_size(k)));
    }

    std::vector<Cyclotomic> row(n);
    for (std::size_t k = 0; k < n; ++k) {
      const long o = g.class_element_order(k);
      const u64 zo = f.pow(z, static_cast<u64>(e / o));
      const u64 inv_o = f.inv(static_cast<u64>(o));
      std::vector<Rational> eig(static_cast<std::size_t>(o), 0);
      long total = 0;
      for (long s = 0; s < o; ++s) {
        u64 acc = 0;
        for (long m = 0; m < o; ++m) {
          const u64 root = f.pow(zo, static_cast<u64>(((-s * m) % o + o) % o));
          acc = f.add(acc, f.mul(chi_mod[g.power_class(k, m)], root));
        }
        const long mult = static_cast<long>(f.mul(acc, inv_o));
        if (mult > degree) throw TableError("internal: eigenvalue multiplicity lift exceeds the degree");
        eig[static_cast<std::size_t>(s)] = mult;
        total += mult;
      }
      if (total != degree) throw TableError("internal: eigenvalue multiplicities do not sum to the degree");
      Cyclotomic value(0);
      for (long s = 0; s < o; ++s) {
        if (eig[s] != 0) value += Cyclotomic::root_of_unity(o, s) * Cyclotomic(eig[s]);
      }
      row[k] = value.descended();
    }
    t.values.push_back(std::move(row));
    t.degrees.push_back(degree);
  }
  t = canonicalized(std::move(t));
  validate_table(t);
  return t;
}

}  // namespace branchlaw
