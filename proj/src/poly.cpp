#include "branchlaw/poly.hpp"

#include <algorithm>

#include "branchlaw/error.hpp"
#include "branchlaw/parallel.hpp"

namespace branchlaw {

namespace {

// Below this many coefficient products the OpenMP split costs more than it saves.
constexpr std::size_t kParallelThreshold = 2048;

std::string monomial_string(const Monomial& m) {
  std::string out;
  for (Var v : kAllVars) {
    const int e = m[static_cast<int>(v)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Appends "+c*mono" in compact form; the first term carries no leading "+".
void append_term(std::string& out, const Cyclotomic& c, const std::string& mono) {
  if (const auto q = c.as_rational()) {
    const bool negative = *q < 0;
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    const Rational mag = abs(*q);
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
    return;
  }
  if (!out.empty()) out += "+";
  out += "(" + c.to_string() + ")";
  if (!mono.empty()) out += "*" + mono;
}

Monomial shifted(Monomial a, const Monomial& b) {
  for (int i = 0; i < 3; ++i) a[i] += b[i];
  return a;
}

}  // namespace

char var_name(Var v) {
  switch (v) {
    case Var::kT: return 't';
    case Var::kU: return 'u';
    case Var::kW: return 'w';
  }
  return '?';
}

std::optional<Var> parse_var(std::string_view s) {
  if (s == "t") return Var::kT;
  if (s == "u") return Var::kU;
  if (s == "w") return Var::kW;
  return std::nullopt;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0, 0}, c);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Cyclotomic& c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::variable(Var v) {
  Monomial m{0, 0, 0};
  m[static_cast<int>(v)] = 1;
  return monomial(m);
}

Cyclotomic MultiPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : branchlaw::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (ib->first != m || !(ib->second == c)) return false;
    ++ib;
  }
  return true;
}

MultiPoly MultiPoly::scaled(const Cyclotomic& c) const {
  MultiPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, x * c);
  return out;
}

MultiPoly MultiPoly::truncated(int n) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (branchlaw::total_degree(m) <= n) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

MultiPoly MultiPoly::substituted(Var v, const Cyclotomic& c) const {
  const int k = static_cast<int>(v);
  std::vector<Cyclotomic> powers{Cyclotomic(1)};
  MultiPoly out;
  for (const auto& [m, x] : terms_) {
    while (static_cast<int>(powers.size()) <= m[k]) powers.push_back(powers.back() * c);
    Monomial r = m;
    r[k] = 0;
    out.add_term(r, x * powers[m[k]]);
  }
  return out;
}

MultiPoly MultiPoly::renamed(Var from, Var to) const {
  if (from == to) return *this;
  if (!is_free_of(to)) {
    throw ArithmeticError(std::string("cannot rename ") + var_name(from) + " to " + var_name(to) +
                          ": target variable occurs");
  }
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r[static_cast<int>(to)] = m[static_cast<int>(from)];
    r[static_cast<int>(from)] = 0;
    out.terms_.emplace(r, c);
  }
  return out;
}

MultiPoly MultiPoly::descended() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c.descended());
  return out;
}

bool MultiPoly::has_rational_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) append_term(out, c, monomial_string(m));
  return out;
}

MultiPoly multiply_serial(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(shifted(ma, mb), ca * cb);
  }
  return out;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
  if (a.size() * b.size() < kParallelThreshold || max_threads() <= 1) return multiply_serial(a, b);
  const std::vector<std::pair<Monomial, Cyclotomic>> left(a.terms().begin(), a.terms().end());
  const std::size_t chunks = std::min(left.size(), static_cast<std::size_t>(max_threads()) * 4);
  std::vector<MultiPoly> parts(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    for (std::size_t i = c; i < left.size(); i += chunks) {
      for (const auto& [mb, cb] : b.terms()) parts[c].add_term(shifted(left[i].first, mb), left[i].second * cb);
    }
  });
  MultiPoly out;
  for (const auto& p : parts) out += p;
  return out;
}

MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, int n) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    const int da = total_degree(ma);
    if (da > n) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + total_degree(mb) <= n) out.add_term(shifted(ma, mb), ca * cb);
    }
  }
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const UniPoly& f) {
  const int k = static_cast<int>(f.var);
  // Slice a by the exponents of the other two variables.
  std::map<Monomial, std::vector<Cyclotomic>> slices;
  for (const auto& [m, c] : a.terms()) {
    Monomial rest = m;
    rest[k] = 0;
    auto& coeffs = slices[rest];
    if (static_cast<int>(coeffs.size()) <= m[k]) coeffs.resize(m[k] + 1, Cyclotomic(0));
    coeffs[m[k]] = c;
  }
  MultiPoly out;
  for (auto& [rest, coeffs] : slices) {
    const auto q = divide_exact(UniPoly(f.var, std::move(coeffs)), f);
    if (!q) return std::nullopt;
    for (std::size_t e = 0; e < q->coeffs.size(); ++e) {
      Monomial m = rest;
      m[k] = static_cast<int>(e);
      out.add_term(m, q->coeffs[e]);
    }
  }
  return out;
}

// ------------------------------------------------------------------ UniPoly

UniPoly::UniPoly(Var v, std::vector<Cyclotomic> c) : var(v), coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Cyclotomic UniPoly::operator()(const Cyclotomic& x) const {
  Cyclotomic acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

MultiPoly UniPoly::to_multipoly() const {
  MultiPoly out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    Monomial m{0, 0, 0};
    m[static_cast<int>(var)] = static_cast<int>(e);
    out.add_term(m, coeffs[e]);
  }
  return out;
}

UniPoly UniPoly::descended() const {
  std::vector<Cyclotomic> c;
  for (const auto& x : coeffs) c.push_back(x.descended());
  return {var, std::move(c)};
}

std::string UniPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e].is_zero()) continue;
    std::string mono;
    if (e > 0) mono = std::string(1, var_name(var)) + (e > 1 ? "^" + std::to_string(e) : "");
    append_term(out, coeffs[e], mono);
  }
  return out;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.var != b.var || a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (!(a.coeffs[i] == b.coeffs[i])) return false;
  }
  return true;
}

int UniPoly::compare(const UniPoly& a, const UniPoly& b) {
  if (a.var != b.var) return a.var < b.var ? -1 : 1;
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const int c = Cyclotomic::compare(a.coeffs[i], b.coeffs[i]);
    if (c != 0) return c;
  }
  return 0;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.var != b.var && !a.is_zero() && !b.is_zero()) {
    throw ArithmeticError("univariate product of polynomials in different variables");
  }
  if (a.is_zero() || b.is_zero()) return {a.var, {}};
  std::vector<Cyclotomic> c(a.coeffs.size() + b.coeffs.size() - 1, Cyclotomic(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return {a.var, std::move(c)};
}

UniPoly pow(const UniPoly& a, int n) {
  UniPoly out(a.var, {Cyclotomic(1)});
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(a.var, {}), a};
  std::vector<Cyclotomic> r = a.coeffs;
  const int db = b.degree();
  std::vector<Cyclotomic> q(a.degree() - db + 1, Cyclotomic(0));
  const Cyclotomic lead_inv = b.coeffs.back().inverse();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Cyclotomic c = r[k + db] * lead_inv;
    if (c.is_zero()) continue;
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b.coeffs[i];
  }
  return {UniPoly(a.var, std::move(q)), UniPoly(a.var, std::move(r))};
}

std::optional<UniPoly> divide_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::vector<Cyclotomic> inverse_series(const UniPoly& f, int n) {
  if (f.is_zero() || f.coeffs[0].is_zero()) throw ArithmeticError("series inverse needs a nonzero constant term");
  const Cyclotomic c0_inv = f.coeffs[0].inverse();
  std::vector<Cyclotomic> g(static_cast<std::size_t>(std::max(n, -1) + 1), Cyclotomic(0));
  for (int k = 0; k <= n; ++k) {
    Cyclotomic s(k == 0 ? 1 : 0);
    for (int i = 1; i <= std::min(k, f.degree()); ++i) s -= f.coeffs[i] * g[k - i];
    g[k] = s * c0_inv;
  }
  return g;
}

UniPoly cyclotomic_factor(long d, Var v) {
  const auto phi = cyclotomic_polynomial(d);
  const Cyclotomic c0(phi[0]);
  std::vector<Cyclotomic> c;
  for (const auto& x : phi) c.push_back(Cyclotomic(x) / c0);
  return {v, std::move(c)};
}

UniPoly linear_factor(const Cyclotomic& a, Var v) { return {v, {Cyclotomic(1), -a}}; }

// -------------------------------------------------------------- FactoredDen

void FactoredDen::multiply(const UniPoly& poly, int mult) {
  if (mult == 0) return;
  if (mult < 0) throw ArithmeticError("negative factor multiplicity");
  if (poly.degree() < 1 || !poly.coeffs[0].is_one()) {
    throw ArithmeticError("denominator factor " + poly.to_string() + " must have degree >= 1 and constant term 1");
  }
  auto it = std::lower_bound(factors_.begin(), factors_.end(), poly,
                             [](const Factor& f, const UniPoly& p) { return UniPoly::compare(f.poly, p) < 0; });
  if (it != factors_.end() && UniPoly::compare(it->poly, poly) == 0) {
    it->mult += mult;
  } else {
    factors_.insert(it, Factor{poly, mult});
  }
}

int FactoredDen::multiplicity(const UniPoly& poly) const {
  for (const auto& f : factors_) {
    if (UniPoly::compare(f.poly, poly) == 0) return f.mult;
  }
  return 0;
}

FactoredDen operator*(const FactoredDen& a, const FactoredDen& b) {
  FactoredDen out = a;
  for (const auto& f : b.factors_) out.multiply(f.poly, f.mult);
  return out;
}

FactoredDen FactoredDen::lcm(const FactoredDen& a, const FactoredDen& b) {
  FactoredDen out = a;
  for (const auto& f : b.factors_) {
    const int have = out.multiplicity(f.poly);
    if (f.mult > have) out.multiply(f.poly, f.mult - have);
  }
  return out;
}

FactoredDen FactoredDen::divided(const FactoredDen& sub) const {
  FactoredDen out = *this;
  for (const auto& f : sub.factors_) {
    auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                           [&](const Factor& g) { return UniPoly::compare(g.poly, f.poly) == 0; });
    if (it == out.factors_.end() || it->mult < f.mult) {
      throw ArithmeticError("factor (" + f.poly.to_string() + ") is not contained in the denominator");
    }
    it->mult -= f.mult;
    if (it->mult == 0) out.factors_.erase(it);
  }
  return out;
}

MultiPoly FactoredDen::expanded() const {
  MultiPoly out(1);
  for (Var v : kAllVars) {
    const UniPoly p = expanded_in(v);
    if (p.degree() > 0) out = out * p.to_multipoly();
  }
  return out;
}

UniPoly FactoredDen::expanded_in(Var v) const {
  UniPoly out(v, {Cyclotomic(1)});
  for (const auto& f : factors_) {
    if (f.poly.var == v) out = out * pow(f.poly, f.mult);
  }
  return out;
}

int FactoredDen::degree_in(Var v) const {
  int d = 0;
  for (const auto& f : factors_) {
    if (f.poly.var == v) d += f.mult * f.poly.degree();
  }
  return d;
}

std::string FactoredDen::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += "(" + f.poly.to_string() + ")";
    if (f.mult > 1) out += "^" + std::to_string(f.mult);
  }
  return out;
}

bool operator==(const FactoredDen& a, const FactoredDen& b) {
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (a.factors_[i].mult != b.factors_[i].mult || !(a.factors_[i].poly == b.factors_[i].poly)) return false;
  }
  return true;
}

// ------------------------------------------------------------------- RatFun

RatFun::RatFun(MultiPoly num, FactoredDen den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = FactoredDen{};
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.num_.is_zero()) return b;
  if (b.num_.is_zero()) return a;
  const FactoredDen l = FactoredDen::lcm(a.den_, b.den_);
  MultiPoly num = a.num_ * l.divided(a.den_).expanded();
  num += b.num_ * l.divided(b.den_).expanded();
  return RatFun(std::move(num), l).cancelled();
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_).cancelled();
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun RatFun::scaled(const Cyclotomic& c) const { return RatFun(num_.scaled(c), den_); }

RatFun RatFun::cancelled() const {
  if (num_.is_zero()) return {};
  MultiPoly num = num_;
  FactoredDen den;
  for (const auto& f : den_.factors()) {
    int mult = f.mult;
    while (mult > 0) {
      auto q = divide_exact(num, f.poly);
      if (!q) break;
      num = std::move(*q);
      --mult;
    }
    den.multiply(f.poly, mult);
  }
  return RatFun(std::move(num), std::move(den));
}

MultiPoly RatFun::series(int n) const {
  MultiPoly out = num_.truncated(n);
  for (Var v : kAllVars) {
    const UniPoly d = den_.expanded_in(v);
    if (d.degree() < 1) continue;
    const auto inv = inverse_series(d, n);
    MultiPoly s;
    for (int e = 0; e <= n; ++e) {
      Monomial m{0, 0, 0};
      m[static_cast<int>(v)] = e;
      s.add_term(m, inv[e]);
    }
    out = multiply_truncated(out, s, n);
  }
  return out;
}

RatFun RatFun::substituted(Var v, const Cyclotomic& c) const {
  FactoredDen den;
  Cyclotomic scale(1);
  for (const auto& f : den_.factors()) {
    if (f.poly.var != v) {
      den.multiply(f.poly, f.mult);
      continue;
    }
    const Cyclotomic value = f.poly(c);
    if (value.is_zero()) {
      throw ArithmeticError(std::string("substituting ") + var_name(v) + " = " + c.to_string() +
                            " hits a pole of (" + f.poly.to_string() + ")");
    }
    for (int i = 0; i < f.mult; ++i) scale *= value;
  }
  return RatFun(num_.substituted(v, c).scaled(scale.inverse()), std::move(den));
}

RatFun RatFun::renamed(Var from, Var to) const {
  if (from == to) return *this;
  if (den_.degree_in(to) > 0) {
    throw ArithmeticError(std::string("cannot rename ") + var_name(from) + " to " + var_name(to) +
                          ": target variable occurs");
  }
  FactoredDen den;
  for (const auto& f : den_.factors()) {
    UniPoly p = f.poly;
    if (p.var == from) p.var = to;
    den.multiply(p, f.mult);
  }
  return RatFun(num_.renamed(from, to), std::move(den));
}

RatFun RatFun::descended() const {
  FactoredDen den;
  for (const auto& f : den_.factors()) den.multiply(f.poly.descended(), f.mult);
  return RatFun(num_.descended(), std::move(den));
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool equal(const RatFun& a, const RatFun& b) {
  FactoredDen common;
  for (const auto& f : a.den().factors()) {
    const int m = std::min(f.mult, b.den().multiplicity(f.poly));
    if (m > 0) common.multiply(f.poly, m);
  }
  const MultiPoly lhs = a.num() * b.den().divided(common).expanded();
  const MultiPoly rhs = b.num() * a.den().divided(common).expanded();
  return lhs == rhs;
}

}  // namespace branchlaw
