#include "branchlaw/branching.hpp"

#include <algorithm>
#include <numeric>

#include "branchlaw/error.hpp"
#include "branchlaw/parallel.hpp"
#include "branchlaw/scalar_parser.hpp"
#include "branchlaw/text.hpp"

namespace branchlaw {

namespace {

MultiPoly var(Var v) { return MultiPoly::variable(v); }

UniPoly uni(Var v, std::initializer_list<Cyclotomic> c) { return UniPoly(v, std::vector<Cyclotomic>(c)); }

template <typename Body>
void run(bool parallel, std::size_t n, Body&& body) {
  if (parallel) {
    parallel_for(n, std::forward<Body>(body));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

// Common denominator data for one variable: the lcm of the split factors
// over all classes, with each Galois orbit raised to a common multiplicity
// so that the product is a product of rational cyclotomic polynomials.
struct CommonFactors {
  Var var = Var::kT;
  long exponent = 1;
  std::map<long, int> roots;      // k -> multiplicity of (1 - E(e)^k x)
  std::map<long, int> cyclotomic; // d -> multiplicity of Phi_d
  FactoredDen remnant;
};

CommonFactors common_factors(const std::vector<const SplitPoly*>& parts, Var v, long e) {
  CommonFactors c;
  c.var = v;
  c.exponent = e;
  for (const SplitPoly* p : parts) {
    for (const auto& [k, mult] : p->roots) c.roots[k] = std::max(c.roots[k], mult);
    c.remnant = FactoredDen::lcm(c.remnant, p->remnant);
  }
  for (const auto& [k, mult] : c.roots) {
    const long d = e / std::gcd(e, k);
    c.cyclotomic[d] = std::max(c.cyclotomic[d], mult);
  }
  for (const auto& [d, mult] : c.cyclotomic) {
    for (long k = 0; k < e; ++k) {
      if (e / std::gcd(e, k) == d) c.roots[k] = mult;
    }
  }
  return c;
}

// The part of the common denominator missing from one class's factors.
MultiPoly complement(const CommonFactors& c, const SplitPoly& p) {
  UniPoly q(c.var, {Cyclotomic(1)});
  for (const auto& [k, mult] : c.roots) {
    const auto it = p.roots.find(k);
    const int have = it == p.roots.end() ? 0 : it->second;
    const UniPoly lin = linear_factor(Cyclotomic::root_of_unity(c.exponent, k), c.var);
    for (int i = have; i < mult; ++i) q = q * lin;
  }
  q = q * c.remnant.divided(p.remnant).expanded_in(c.var);
  return q.descended().to_multipoly();
}

FactoredDen rational_denominator(const CommonFactors& c) {
  FactoredDen den;
  for (const auto& [d, mult] : c.cyclotomic) den.multiply(cyclotomic_factor(d, c.var), mult);
  if (!c.remnant.is_one()) den.multiply(c.remnant.expanded_in(c.var).descended(), 1);
  return den;
}

std::optional<long> nonnegative_integer(const Cyclotomic& c) {
  const auto q = c.as_rational();
  if (!q || q->get_den() != 1 || *q < 0 || !q->get_num().fits_slong_p()) return std::nullopt;
  return q->get_num().get_si();
}

BranchingSeries compute_series_impl(const CharacterTable& t, const TensorMatrices& m, const std::string& group,
                                    bool parallel) {
  const std::size_t n = t.size();
  if (m.size() != n) throw PipelineError("tensor matrices and character table sizes differ");
  const long e = std::accumulate(t.class_orders.begin(), t.class_orders.end(), 1L,
                                 [](long a, long b) { return std::lcm(a, b); });

  std::vector<DeltaFactors> delta(n);
  run(parallel, n, [&](std::size_t j) { delta[j] = f_factor(m.l1[j], m.l2[j], m.l3[j], e); });

  std::vector<CommonFactors> common;
  for (Var v : kAllVars) {
    std::vector<const SplitPoly*> parts;
    for (const auto& d : delta) parts.push_back(v == Var::kT ? &d.t : v == Var::kU ? &d.u : &d.w);
    common.push_back(common_factors(parts, v, e));
  }

  const auto y = build_J(m).column(0);
  const CyclotomicMatrix tinv = inverse_table(t);

  // W_j = (T^{-1} J e_0)_j times the complement of Delta_jj's denominator.
  std::vector<MultiPoly> w(n);
  run(parallel, n, [&](std::size_t j) {
    MultiPoly z;
    for (std::size_t k = 0; k < n; ++k) z += y[k].scaled(tinv[j][k]);
    for (std::size_t v = 0; v < 3; ++v) {
      const SplitPoly& own = v == 0 ? delta[j].t : v == 1 ? delta[j].u : delta[j].w;
      const MultiPoly q = complement(common[v], own);
      z = parallel ? multiply(z, q) : multiply_serial(z, q);
    }
    w[j] = std::move(z);
  });

  FactoredDen den;
  for (const auto& c : common) den = den * rational_denominator(c);

  BranchingSeries out;
  out.group = group;
  out.degrees = t.degrees;
  out.coords.resize(n);
  run(parallel, n, [&](std::size_t i) {
    MultiPoly num;
    for (std::size_t j = 0; j < n; ++j) num += w[j].scaled(t(i, j));
    num = num.descended();
    for (const auto& [mono, c] : num.terms()) {
      if (!c.is_rational()) {
        throw PipelineError("coordinate " + std::to_string(i) + ": coefficient of t^" + std::to_string(mono[0]) +
                            " u^" + std::to_string(mono[1]) + " w^" + std::to_string(mono[2]) + " is " +
                            c.to_string() + ", not rational");
      }
    }
    out.coords[i] = RatFun(std::move(num), den).cancelled();
  });
  for (std::size_t i = 0; i < n; ++i) out.irrep_labels.push_back("chi_" + std::to_string(i));
  return out;
}

}  // namespace

MatrixPoly build_J(const TensorMatrices& m) {
  const MultiPoly t = var(Var::kT);
  const MultiPoly u = var(Var::kU);
  const MultiPoly w = var(Var::kW);
  const MultiPoly one(1);
  const MultiPoly one_minus_u2 = one - u * u;
  const MultiPoly ut2 = one + u * t * t;  // 1 + u t^2
  const MultiPoly uw2 = one + u * w * w;  // 1 + u w^2

  MatrixPoly j(m.size());
  j.add(one_minus_u2 * (ut2 * uw2 - t * w * (one + u * u)), MatrixPoly::identity(m.size()));
  j.add(t * w * u * one_minus_u2, m.a2);
  j.add(-(t * u * uw2), m.a3);
  j.add(t * u * uw2 * u, m.a1);
  j.add(-(w * u * ut2), m.a1);
  j.add(w * u * ut2 * u, m.a3);
  return j;
}

UniPoly t_quartic(const Cyclotomic& d1, const Cyclotomic& d2, const Cyclotomic& d3) {
  return uni(Var::kT, {Cyclotomic(1), -d1, d2, -d3, Cyclotomic(1)});
}

UniPoly w_quartic(const Cyclotomic& d1, const Cyclotomic& d2, const Cyclotomic& d3) {
  return uni(Var::kW, {Cyclotomic(1), -d3, d2, -d1, Cyclotomic(1)});
}

UniPoly u_sextic(const Cyclotomic& d1, const Cyclotomic& d2, const Cyclotomic& d3) {
  const Var v = Var::kU;
  const UniPoly one_minus_u2 = uni(v, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(-1)});
  const UniPoly sq = one_minus_u2 * one_minus_u2;
  const UniPoly a = uni(v, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)}) * sq;
  const UniPoly b = uni(v, {Cyclotomic(0), -d2}) * sq;
  const UniPoly c = uni(v, {Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)}) * uni(v, {d1, -d3}) * uni(v, {d3, -d1});
  std::vector<Cyclotomic> coeffs(7, Cyclotomic(0));
  for (const UniPoly* p : {&a, &b, &c}) {
    for (std::size_t i = 0; i < p->coeffs.size(); ++i) coeffs[i] += p->coeffs[i];
  }
  return UniPoly(v, std::move(coeffs));
}

UniPoly SplitPoly::expanded() const {
  UniPoly out(var, {Cyclotomic(1)});
  for (const auto& [k, mult] : roots) out = out * pow(linear_factor(Cyclotomic::root_of_unity(exponent, k), var), mult);
  return out * remnant.expanded_in(var);
}

SplitPoly split_over_roots_of_unity(const UniPoly& f, long e) {
  if (f.is_zero() || !f.coeffs[0].is_one()) {
    throw ArithmeticError("splitting needs constant term 1, got " + f.to_string());
  }
  SplitPoly s;
  s.var = f.var;
  s.exponent = e;
  UniPoly rest = f;
  for (long k = 0; k < e && rest.degree() > 0; ++k) {
    // (1 - z x) divides rest iff rest(1/z) = 0.
    const Cyclotomic z = Cyclotomic::root_of_unity(e, k);
    const Cyclotomic z_inv = Cyclotomic::root_of_unity(e, (e - k) % e);
    while (rest.degree() > 0 && rest(z_inv).is_zero()) {
      rest = *divide_exact(rest, linear_factor(z, f.var));
      ++s.roots[k];
    }
  }
  if (rest.degree() > 0) s.remnant.multiply(rest.descended(), 1);
  return s;
}

RatFun DeltaFactors::as_ratfun() const {
  FactoredDen den;
  for (const SplitPoly* p : {&t, &u, &w}) {
    for (const auto& [k, mult] : p->roots) {
      den.multiply(linear_factor(Cyclotomic::root_of_unity(p->exponent, k), p->var).descended(), mult);
    }
    den = den * p->remnant;
  }
  return RatFun(MultiPoly(1), den);
}

DeltaFactors f_factor(const Cyclotomic& d1, const Cyclotomic& d2, const Cyclotomic& d3, long e) {
  DeltaFactors out;
  out.t = split_over_roots_of_unity(t_quartic(d1, d2, d3), e);
  out.u = split_over_roots_of_unity(u_sextic(d1, d2, d3), e);
  out.w = split_over_roots_of_unity(w_quartic(d1, d2, d3), e);
  for (const SplitPoly* p : {&out.t, &out.w}) {
    if (!p->remnant.is_one()) {
      throw PipelineError(std::string("the ") + var_name(p->var) + "-quartic for eigenvalues (" + d1.to_string() +
                          ", " + d2.to_string() + ", " + d3.to_string() + ") does not split over the " +
                          std::to_string(e) + "-th roots of unity");
    }
  }
  return out;
}

FactoredDen BranchingSeries::common_denominator() const {
  FactoredDen out;
  for (const auto& c : coords) out = FactoredDen::lcm(out, c.den());
  return out;
}

BranchingSeries compute_series(const CharacterTable& t, const TensorMatrices& m, const std::string& group) {
  return compute_series_impl(t, m, group, true);
}

BranchingSeries compute_series_serial(const CharacterTable& t, const TensorMatrices& m,
                                      const std::string& group) {
  return compute_series_impl(t, m, group, false);
}

RatFun molien_series(const GroupData& g) {
  const auto chi = natural_character(g);
  const auto ext = exterior_square_character(g, chi);
  const long e = g.exponent();
  RatFun sum;
  for (std::size_t j = 0; j < g.num_classes(); ++j) {
    // det(1 - t g) for g in SL4: 1 - chi t + chi_ext t^2 - conj(chi) t^3 + t^4.
    UniPoly rest = uni(Var::kT, {Cyclotomic(1), -chi[j], ext[j], -chi[j].conjugate(), Cyclotomic(1)});
    FactoredDen den;
    for (long d = 1; d <= e && rest.degree() > 0; ++d) {
      if (e % d != 0) continue;
      const UniPoly phi = cyclotomic_factor(d, Var::kT);
      while (rest.degree() > 0) {
        auto q = divide_exact(rest, phi);
        if (!q) break;
        rest = std::move(*q);
        den.multiply(phi, 1);
      }
    }
    if (rest.degree() > 0) den.multiply(rest.descended(), 1);
    const Cyclotomic weight(make_rational(static_cast<long>(g.class_size(j)), static_cast<long>(g.order())));
    sum = sum + RatFun(MultiPoly(weight), den);
  }
  return sum.cancelled().descended();
}

MultiplicityTable extract_multiplicities(const BranchingSeries& s, int n) {
  const std::size_t count = s.coords.size();
  std::vector<MultiPoly> series(count);
  parallel_for(count, [&](std::size_t i) { series[i] = s.coords[i].series(n); });
  MultiplicityTable out;
  out.max_degree = n;
  out.method = "series";
  for (const Monomial& mono : triples_up_to(n)) {
    std::vector<long> v(count);
    for (std::size_t i = 0; i < count; ++i) {
      const Cyclotomic c = series[i].coeff(mono);
      const auto value = nonnegative_integer(c);
      if (!value) {
        throw PipelineError("multiplicity of chi_" + std::to_string(i) + " at (" + std::to_string(mono[0]) + "," +
                            std::to_string(mono[1]) + "," + std::to_string(mono[2]) + ") is " + c.to_string() +
                            ", not a non-negative integer");
      }
      v[i] = *value;
    }
    out.values.emplace(mono, std::move(v));
  }
  return out;
}

CheckList check_series_invariants(const BranchingSeries& s) {
  CheckList out;
  bool constants = !s.coords.empty();
  for (std::size_t i = 0; i < s.coords.size(); ++i) {
    const Cyclotomic c = s.coords[i].num().coeff(Monomial{0, 0, 0});
    constants = constants && c == Cyclotomic(i == 0 ? 1 : 0);
  }
  out.add("constant terms are e_0", constants);
  bool rational = true;
  for (const auto& c : s.coords) {
    rational = rational && c.num().has_rational_coeffs();
    for (const auto& f : c.den().factors()) {
      rational = rational && std::all_of(f.poly.coeffs.begin(), f.poly.coeffs.end(),
                                         [](const Cyclotomic& x) { return x.is_rational(); });
    }
  }
  out.add("numerators and denominators have rational coefficients", rational);
  return out;
}

RatFun specialize(const RatFun& f, const std::vector<std::pair<Var, Cyclotomic>>& assignments) {
  RatFun out = f;
  for (const auto& [v, c] : assignments) out = out.substituted(v, c);
  return out.cancelled();
}

std::vector<std::pair<Var, Cyclotomic>> parse_assignments(std::string_view text) {
  std::vector<std::pair<Var, Cyclotomic>> out;
  for (const auto& raw : split(text, ',')) {
    const std::string item = trim(raw);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("assignment '" + item + "' needs the form var=value");
    const auto v = parse_var(trim(item.substr(0, eq)));
    if (!v) throw ParseError("assignment '" + item + "': variable must be t, u or w");
    out.emplace_back(*v, parse_scalar(trim(item.substr(eq + 1))));
  }
  if (out.empty()) throw ParseError("empty assignment list");
  return out;
}

}  // namespace branchlaw
