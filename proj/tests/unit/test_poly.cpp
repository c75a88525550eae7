#include <random>

#include "doctest.h"

#include "branchlaw/error.hpp"
#include "branchlaw/parallel.hpp"
#include "branchlaw/poly.hpp"
#include "reference_data.hpp"

using namespace branchlaw;
using reference::uni;

namespace {

const MultiPoly t = MultiPoly::variable(Var::kT);
const MultiPoly u = MultiPoly::variable(Var::kU);
const MultiPoly w = MultiPoly::variable(Var::kW);

RatFun over(const MultiPoly& num, std::initializer_list<std::pair<UniPoly, int>> factors) {
  FactoredDen den;
  for (const auto& [p, m] : factors) den.multiply(p, m);
  return RatFun(num, den);
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MultiPoly random_poly(std::mt19937& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<long> c(-5, 5);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) p.add_term({e(rng), e(rng), e(rng)}, Cyclotomic(c(rng)));
  return p;
}

}  // namespace

TEST_SUITE("polyrat") {

TEST_CASE("polynomial ring basics") {
  const MultiPoly p = (t + u) * (t - u);
  CHECK(p == t * t - u * u);
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(Var::kU) == 2);
  CHECK(p.is_free_of(Var::kW));
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "t^2-u^2");
  CHECK(MultiPoly(0).to_string() == "0");
  CHECK(p.substituted(Var::kU, Cyclotomic(2)) == t * t - MultiPoly(4));
  CHECK(p.renamed(Var::kU, Var::kW) == t * t - w * w);
  CHECK((t * u * w + t * t * t).truncated(2).is_zero());
  CHECK(parse_var("u") == Var::kU);
  CHECK_FALSE(parse_var("x").has_value());
}

TEST_CASE("graded lex order prints largest first") {
  const MultiPoly p = MultiPoly(1) + w + u * u + t * u + t * t * w;
  CHECK(p.to_string() == "t^2*w+t*u+u^2+w+1");
}

TEST_CASE("parallel product equals the serial reference") {
  std::mt19937 rng(17);
  const MultiPoly a = random_poly(rng, 80, 12);
  const MultiPoly b = random_poly(rng, 80, 12);
  const int before = max_threads();
  set_num_threads(4);
  const MultiPoly par = multiply(a, b);
  set_num_threads(before);
  CHECK(par == multiply_serial(a, b));
  CHECK(par.truncated(10) == multiply_truncated(a, b, 10));
}

TEST_CASE("univariate division") {
  const UniPoly a = uni(Var::kT, {-1, 0, 0, 1});  // t^3 - 1
  const UniPoly b = uni(Var::kT, {-1, 1});
  const auto [q, r] = divmod(a, b);
  CHECK(q == uni(Var::kT, {1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(divide_exact(a, b).has_value());
  CHECK_FALSE(divide_exact(a, uni(Var::kT, {1, 1})).has_value());
  const auto [q2, r2] = divmod(uni(Var::kT, {1, 0, 1}), uni(Var::kT, {1, 1}));
  CHECK(q2 == uni(Var::kT, {-1, 1}));
  CHECK(r2 == uni(Var::kT, {2}));
  CHECK(pow(b, 3) == uni(Var::kT, {-1, 3, -3, 1}));
}

TEST_CASE("inverse series") {
  const auto inv = inverse_series(uni(Var::kT, {1, -1}), 5);
  for (const auto& c : inv) CHECK(c == Cyclotomic(1));
  const auto fib = inverse_series(uni(Var::kT, {1, -1, -1}), 7);
  const long expected[] = {1, 1, 2, 3, 5, 8, 13, 21};
  for (int i = 0; i < 8; ++i) CHECK(fib[i] == Cyclotomic(expected[i]));
  CHECK_THROWS_AS(inverse_series(uni(Var::kT, {0, 1}), 3), ArithmeticError);
}

TEST_CASE("cyclotomic and linear factors") {
  CHECK(cyclotomic_factor(1, Var::kT) == uni(Var::kT, {1, -1}));
  CHECK(cyclotomic_factor(2, Var::kT) == uni(Var::kT, {1, 1}));
  CHECK(cyclotomic_factor(5, Var::kU) == uni(Var::kU, {1, 1, 1, 1, 1}));
  CHECK(linear_factor(Cyclotomic(-1), Var::kW) == uni(Var::kW, {1, 1}));
  // prod over 4th roots of (1 - z x) = 1 - x^4
  UniPoly p = uni(Var::kT, {1});
  for (long k = 0; k < 4; ++k) p = p * linear_factor(Cyclotomic::root_of_unity(4, k), Var::kT);
  CHECK(p == uni(Var::kT, {1, 0, 0, 0, -1}));
}

TEST_CASE("factored denominators") {
  FactoredDen a;
  a.multiply(uni(Var::kT, {1, -1}), 2);
  a.multiply(uni(Var::kU, {1, 1}));
  FactoredDen b;
  b.multiply(uni(Var::kT, {1, -1}), 3);
  CHECK(a.multiplicity(uni(Var::kT, {1, -1})) == 2);
  const FactoredDen l = FactoredDen::lcm(a, b);
  CHECK(l.multiplicity(uni(Var::kT, {1, -1})) == 3);
  CHECK(l.multiplicity(uni(Var::kU, {1, 1})) == 1);
  FactoredDen rest;
  rest.multiply(uni(Var::kT, {1, -1}));
  CHECK(l.divided(a) == rest);
  CHECK((a * b).multiplicity(uni(Var::kT, {1, -1})) == 5);
  CHECK(a.degree_in(Var::kT) == 2);
  CHECK(a.expanded_in(Var::kT) == uni(Var::kT, {1, -2, 1}));
  CHECK_THROWS_AS(a.multiply(uni(Var::kT, {2, 1})), ArithmeticError);
  CHECK_THROWS_AS(a.divided(b), ArithmeticError);
}

TEST_CASE("rational function arithmetic") {
  const UniPoly one_minus_t = uni(Var::kT, {1, -1});
  const UniPoly one_minus_u = uni(Var::kU, {1, -1});
  SUBCASE("1/(1-t) + (-t)/(1-t) = 1") {
    const RatFun s = over(1, {{one_minus_t, 1}}) + over(-t, {{one_minus_t, 1}});
    CHECK(s.den().is_one());
    CHECK(s.num() == MultiPoly(1));
  }
  SUBCASE("product of independent denominators") {
    const RatFun p = over(1, {{one_minus_t, 1}}) * over(1, {{one_minus_u, 1}});
    CHECK(p.num() == MultiPoly(1));
    CHECK(p.den().multiplicity(one_minus_t) == 1);
    CHECK(p.den().multiplicity(one_minus_u) == 1);
  }
  SUBCASE("cancellation") {
    const RatFun c = over(MultiPoly(1) - t * t, {{one_minus_t, 1}}).cancelled();
    CHECK(c.den().is_one());
    CHECK(c.num() == MultiPoly(1) + t);
    const MultiPoly x = t * w + MultiPoly(3);
    const RatFun d = over((MultiPoly(1) - u * u) * x, {{one_minus_u, 1}}).cancelled();
    CHECK(d.num() == (MultiPoly(1) + u) * x);
    const RatFun irreducible = over(MultiPoly(1) + t, {{one_minus_t, 2}});
    CHECK(irreducible.cancelled().to_string() == irreducible.to_string());
  }
  SUBCASE("equality by cross-multiplication") {
    CHECK(equal(over(MultiPoly(1) - t * t, {{one_minus_t, 1}}), RatFun(MultiPoly(1) + t)));
    CHECK_FALSE(equal(over(1, {{one_minus_t, 1}}), over(1, {{uni(Var::kU, {1, -1}), 1}})));
    CHECK(equal(over(1, {{one_minus_t, 1}}), over(MultiPoly(1) + t, {{uni(Var::kT, {1, 0, -1}), 1}})));
  }
  SUBCASE("subtraction and scaling") {
    const RatFun f = over(t, {{one_minus_t, 2}});
    CHECK((f - f).num().is_zero());
    CHECK(equal(f.scaled(Cyclotomic(2)), f + f));
  }
}

TEST_CASE("series expansion") {
  const RatFun f = over(1, {{uni(Var::kT, {1, -1}), 4}});
  const MultiPoly s = f.series(6);
  for (int p = 0; p <= 6; ++p) CHECK(s.coeff({p, 0, 0}) == Cyclotomic(binomial(p + 3, 3)));
  const MultiPoly g = over(1, {{uni(Var::kT, {1, -1}), 1}, {uni(Var::kU, {1, -1}), 1}}).series(4);
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q) CHECK(g.coeff({p, q, 0}) == Cyclotomic(1));
  CHECK(g.coeff({0, 0, 1}).is_zero());
}

TEST_CASE("series is a ring homomorphism") {
  const RatFun a = over(MultiPoly(1) + t * u, {{uni(Var::kT, {1, -1}), 2}, {uni(Var::kW, {1, 1}), 1}});
  const RatFun b = over(u - w, {{uni(Var::kU, {1, 0, 1}), 1}});
  const int n = 7;
  CHECK((a * b).series(n) == multiply_truncated(a.series(n), b.series(n), n));
  CHECK((a + b).series(n) == a.series(n) + b.series(n));
  // Cancellation changes neither the value nor the series.
  const RatFun c = over((MultiPoly(1) - t) * (MultiPoly(1) + w) * u, {{uni(Var::kT, {1, -1}), 2}, {uni(Var::kW, {1, 1}), 1}});
  CHECK(c.cancelled().series(n) == c.series(n));
  CHECK(equal(c.cancelled(), c));
  CHECK(c.cancelled().den().degree_in(Var::kW) == 0);
}

TEST_CASE("substitution and renaming") {
  const RatFun f = over(t + u, {{uni(Var::kU, {1, -1}), 1}});
  const RatFun at0 = f.substituted(Var::kU, Cyclotomic(0));
  CHECK(at0.den().is_one());
  CHECK(at0.num() == t);
  CHECK_THROWS_AS(f.substituted(Var::kU, Cyclotomic(1)), ArithmeticError);
  const RatFun g = over(t, {{uni(Var::kT, {1, -1}), 1}}).renamed(Var::kT, Var::kW);
  CHECK(g.num() == w);
  CHECK(g.den().multiplicity(uni(Var::kW, {1, -1})) == 1);
  CHECK_THROWS_AS(f.renamed(Var::kT, Var::kU), ArithmeticError);
}

TEST_CASE("published invariant series expands to known coefficients") {
  // 1, 0, 1, 1, 2, ... : no invariant of degree 1, one in degree 2 (the form).
  const MultiPoly s = reference::invariant_series().series(4);
  CHECK(s.coeff({0, 0, 0}) == Cyclotomic(1));
  CHECK(s.coeff({1, 0, 0}).is_zero());
  CHECK(s.coeff({2, 0, 0}) == Cyclotomic(1));
}

}  // TEST_SUITE
