#include "branchlaw/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "branchlaw/error.hpp"

namespace branchlaw {

long euler_phi(long m) {
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> divisors(long m) {
  std::vector<long> out;
  for (long d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

// Exact division of integer polynomials, divisor monic.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long m) {
  if (m < 1) throw ArithmeticError("cyclotomic polynomial order must be positive");
  std::vector<Integer> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (long d : divisors(m)) {
    if (d == m) break;
    poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

namespace detail {

void CyclotomicField::reduce(std::vector<Integer>& poly) const {
  const auto deg = static_cast<std::size_t>(degree);
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    const Integer c = poly[k];
    const std::size_t base = k - deg;
    for (std::size_t i : modulus_nz) poly[base + i] -= c * modulus[i];
    poly[k] = 0;
  }
  poly.resize(deg);
}

const CyclotomicField& field(long order) {
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<CyclotomicField>> cache;
  if (order < 1) throw ArithmeticError("cyclotomic order must be positive");
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return *it->second;
  auto f = std::make_unique<CyclotomicField>();
  f->order = order;
  f->degree = euler_phi(order);
  f->modulus = cyclotomic_polynomial(order);
  for (std::size_t i = 0; i + 1 < f->modulus.size(); ++i) {
    if (f->modulus[i] != 0) f->modulus_nz.push_back(i);
  }
  const CyclotomicField& ref = *f;
  cache.emplace(order, std::move(f));
  return ref;
}

}  // namespace detail

Cyclotomic::Cyclotomic() : Cyclotomic(Integer(0)) {}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Integer(value)) {}

Cyclotomic::Cyclotomic(const Integer& value)
    : field_(&detail::field(1)), num_{value}, den_(1) {}

Cyclotomic::Cyclotomic(const Rational& value)
    : field_(&detail::field(1)), num_{value.get_num()}, den_(value.get_den()) {
  normalize();
}

Cyclotomic::Cyclotomic(const detail::CyclotomicField* f, std::vector<Integer> num, Integer den)
    : field_(f), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(long m, long k) {
  const auto& f = detail::field(m);
  std::vector<Integer> poly(static_cast<std::size_t>(std::max(m, f.degree)), 0);
  const long e = ((k % m) + m) % m;
  poly[static_cast<std::size_t>(e)] = 1;
  f.reduce(poly);
  return Cyclotomic(&f, std::move(poly), 1);
}

Cyclotomic Cyclotomic::from_coeffs(long m, std::span<const Rational> coeffs) {
  const auto& f = detail::field(m);
  if (static_cast<long>(coeffs.size()) != f.degree) {
    throw ArithmeticError("coefficient vector length must equal phi(" + std::to_string(m) + ")");
  }
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.push_back(c.get_num() * (den / c.get_den()));
  return Cyclotomic(&f, std::move(num), std::move(den));
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 0) throw ArithmeticError("zero denominator");
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.push_back(make_rational(c, den_));
  return out;
}

Rational Cyclotomic::coeff(std::size_t i) const { return make_rational(num_.at(i), den_); }

bool Cyclotomic::is_zero() const noexcept {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool Cyclotomic::is_one() const { return is_rational() && num_[0] == 1 && den_ == 1; }

bool Cyclotomic::is_rational() const noexcept {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return make_rational(num_[0], den_);
}

Cyclotomic Cyclotomic::lift_to(const Cyclotomic& a, long order) {
  const long m = a.order();
  if (m == order) return a;
  if (order % m != 0) {
    throw ArithmeticError("cannot lift order " + std::to_string(m) + " to " + std::to_string(order));
  }
  const auto& f = detail::field(order);
  const long step = order / m;
  std::vector<Integer> poly(static_cast<std::size_t>(std::max<long>(f.degree, (a.degree() - 1) * step + 1)), 0);
  for (std::size_t i = 0; i < a.num_.size(); ++i) poly[i * static_cast<std::size_t>(step)] = a.num_[i];
  f.reduce(poly);
  return Cyclotomic(&f, std::move(poly), a.den_);
}

Cyclotomic Cyclotomic::lifted(long order) const { return lift_to(*this, order); }

std::optional<Cyclotomic> Cyclotomic::lowered(long order) const {
  const long m = this->order();
  if (order == m) return *this;
  if (order < 1 || m % order != 0) {
    throw ArithmeticError("order " + std::to_string(order) + " does not divide " + std::to_string(m));
  }
  if (is_rational()) return Cyclotomic(make_rational(num_[0], den_)).lifted(order);
  const long d = euler_phi(order);
  const long n = degree();
  // Columns: the lifts of zeta_order^i for i < d. Solve for the combination
  // equal to num_ (the common denominator is reattached at the end).
  std::vector<std::vector<Rational>> aug(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(d) + 1));
  for (long i = 0; i < d; ++i) {
    const Cyclotomic basis = root_of_unity(order, i).lifted(m);
    for (long r = 0; r < n; ++r) aug[r][i] = Rational(basis.num_[r], basis.den_);
  }
  for (long r = 0; r < n; ++r) aug[r][d] = num_[r];
  std::size_t row = 0;
  std::vector<long> pivot_col;
  for (long col = 0; col < d && row < aug.size(); ++col) {
    std::size_t piv = row;
    while (piv < aug.size() && aug[piv][col] == 0) ++piv;
    if (piv == aug.size()) continue;
    std::swap(aug[piv], aug[row]);
    const Rational inv = 1 / aug[row][col];
    for (auto& v : aug[row]) v *= inv;
    for (std::size_t r = 0; r < aug.size(); ++r) {
      if (r == row || aug[r][col] == 0) continue;
      const Rational factor = aug[r][col];
      for (long c = col; c <= d; ++c) aug[r][c] -= factor * aug[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < aug.size(); ++r) {
    if (aug[r][d] != 0) return std::nullopt;
  }
  std::vector<Rational> sol(static_cast<std::size_t>(d), 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = aug[r][d] / den_;
  return from_coeffs(order, sol);
}

Cyclotomic Cyclotomic::descended() const {
  if (is_rational()) return Cyclotomic(make_rational(num_[0], den_));
  const long m = order();
  for (long d : divisors(m)) {
    if (d == m) break;
    if (d % 4 == 2) continue;  // Q(zeta_d) = Q(zeta_{d/2})
    if (auto low = lowered(d)) return *low;
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(long k) const {
  const long m = order();
  if (m <= 2) return *this;
  k = ((k % m) + m) % m;
  if (std::gcd(k, m) != 1) throw ArithmeticError("Galois exponent not coprime to the order");
  std::vector<Integer> poly(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    poly[(static_cast<long>(i) * k) % m] += num_[i];
  }
  field_->reduce(poly);
  return Cyclotomic(field_, std::move(poly), den_);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) {
    Cyclotomic r(make_rational(den_, num_[0]));
    return order() == 1 ? r : r.lifted(order());
  }
  // x^{-1} = (prod of the other conjugates) / norm(x).
  const long m = order();
  Cyclotomic others(1);
  for (long k = 2; k < m; ++k) {
    if (std::gcd(k, m) == 1) others *= galois(k);
  }
  const Cyclotomic norm = *this * others;
  const auto q = norm.as_rational();
  if (!q) throw ArithmeticError("internal: field norm is not rational");
  others.scale(1 / *q);
  return others.lifted(m);
}

Cyclotomic Cyclotomic::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

void Cyclotomic::scale(const Rational& q) {
  if (q == 0) {
    std::fill(num_.begin(), num_.end(), Integer(0));
    den_ = 1;
    return;
  }
  for (auto& c : num_) c *= q.get_num();
  den_ *= q.get_den();
  normalize();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.order() == 1 || order() == rhs.order()) {
    if (rhs.order() == 1 && order() != 1) {
      // rational addend only touches the zeta^0 coefficient
      if (den_ == rhs.den_) {
        num_[0] += rhs.num_[0];
      } else {
        const Integer l = lcm(den_, rhs.den_);
        const Integer sa = l / den_;
        for (auto& c : num_) c *= sa;
        num_[0] += rhs.num_[0] * (l / rhs.den_);
        den_ = l;
      }
      normalize();
      return *this;
    }
    if (den_ == rhs.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
    } else {
      const Integer l = lcm(den_, rhs.den_);
      const Integer sa = l / den_;
      const Integer sb = l / rhs.den_;
      for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * sa + rhs.num_[i] * sb;
      den_ = l;
    }
    normalize();
    return *this;
  }
  if (order() == 1) {
    Cyclotomic r = rhs;
    r += *this;
    return *this = std::move(r);
  }
  const long common = std::lcm(order(), rhs.order());
  Cyclotomic a = lift_to(*this, common);
  a += lift_to(rhs, common);
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == 1) {
    Cyclotomic r = b;
    r.scale(make_rational(a.num_[0], a.den_));
    return r;
  }
  if (b.order() == 1) {
    Cyclotomic r = a;
    r.scale(make_rational(b.num_[0], b.den_));
    return r;
  }
  if (a.order() != b.order()) {
    const long common = std::lcm(a.order(), b.order());
    return Cyclotomic::lift_to(a, common) * Cyclotomic::lift_to(b, common);
  }
  const std::size_t n = a.num_.size();
  std::vector<Integer> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  a.field_->reduce(prod);
  return Cyclotomic(a.field_, std::move(prod), a.den_ * b.den_);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  if (rhs.order() == 1) {
    scale(make_rational(rhs.den_, rhs.num_[0]));
    return *this;
  }
  return *this = *this * rhs.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.den_ == b.den_ && a.num_ == b.num_;
  if (a.is_rational() && b.is_rational()) return a.den_ == b.den_ && a.num_[0] == b.num_[0];
  const long common = std::lcm(a.order(), b.order());
  return Cyclotomic::lift_to(a, common) == Cyclotomic::lift_to(b, common);
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) {
    const long common = std::lcm(a.order(), b.order());
    return compare(lift_to(a, common), lift_to(b, common));
  }
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    const int c = cmp(Rational(a.num_[i], a.den_), Rational(b.num_[i], b.den_));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::size_t Cyclotomic::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(order());
  for (const auto& c : num_) h = h * 1000003u ^ hash_value(c);
  return h * 1000003u ^ hash_value(den_);
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return make_rational(num_[0], den_).get_str();
  std::ostringstream os;
  bool first = true;
  const long m = order();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c = make_rational(num_[i], den_);
    const bool negative = c < 0;
    if (!first) os << (negative ? "-" : "+");
    else if (negative) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "E(" << m << ")";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0;
  const double m = static_cast<double>(order());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
    sum += make_rational(num_[i], den_).get_d() * std::polar(1.0, angle);
  }
  return sum;
}

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw ArithmeticError("unknown arithmetic operation");
}

Cyclotomic sqrt_integer(long n) {
  if (n <= 0) throw ArithmeticError("sqrt_integer: argument must be positive, got " + std::to_string(n));
  Cyclotomic result(1);
  long rest = n;
  for (long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) {
      throw ArithmeticError("sqrt_integer: " + std::to_string(n) + " is not squarefree");
    }
    if (p == 2) {
      result *= Cyclotomic::root_of_unity(8, 1) - Cyclotomic::root_of_unity(8, 3);
      continue;
    }
    Cyclotomic gauss(0);
    for (long a = 0; a < p; ++a) gauss += Cyclotomic::root_of_unity(p, (a * a) % p);
    // For p = 3 mod 4 the Gauss sum is i*sqrt(p).
    if (p % 4 == 3) gauss *= Cyclotomic::root_of_unity(4, 3);
    result *= gauss;
  }
  return result;
}

}  // namespace branchlaw
