#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"

#include "branchlaw/cyclotomic.hpp"
#include "branchlaw/error.hpp"
#include "branchlaw/scalar_parser.hpp"
#include "support.hpp"

using namespace branchlaw;

namespace {

const long kOrders[] = {1, 3, 4, 5, 8, 12, 60};

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_SUITE("exactnum") {

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(20240611);
  for (long m : kOrders) {
    CAPTURE(m);
    for (int trial = 0; trial < 20; ++trial) {
      const Cyclotomic a = test::random_cyclotomic(rng, m);
      const Cyclotomic b = test::random_cyclotomic(rng, m);
      const Cyclotomic c = test::random_cyclotomic(rng, m);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Cyclotomic(0));
      CHECK(a + Cyclotomic(0) == a);
      CHECK(a * Cyclotomic(1) == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("arithmetic agrees with complex floating point") {
  std::mt19937 rng(7);
  for (long m : kOrders) {
    for (int trial = 0; trial < 10; ++trial) {
      const Cyclotomic a = test::random_cyclotomic(rng, m);
      const Cyclotomic b = test::random_cyclotomic(rng, 3 * m);
      CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
      CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
      CHECK(close(a.conjugate().to_complex(), std::conj(a.to_complex())));
    }
  }
}

TEST_CASE("roots of unity") {
  CHECK(Cyclotomic::root_of_unity(4).pow(2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(60).pow(60) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(6) == -Cyclotomic::root_of_unity(3, 2));
  Cyclotomic sum(0);
  for (long k = 0; k < 5; ++k) sum += Cyclotomic::root_of_unity(5, k);
  CHECK(sum.is_zero());
  const auto z = Cyclotomic::root_of_unity(12, 5).to_complex();
  CHECK(close(z, std::polar(1.0, 2 * std::numbers::pi * 5 / 12)));
}

TEST_CASE("mixed orders lift to the lcm and compare by value") {
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  const Cyclotomic w = Cyclotomic::root_of_unity(3);
  const Cyclotomic p = i * w;
  CHECK(p.order() == 12);
  CHECK(p == Cyclotomic::root_of_unity(12, 7));
  CHECK(i.lifted(12) == i);
  CHECK(i.lifted(12).order() == 12);
  CHECK_THROWS_AS(i.lifted(6), ArithmeticError);
}

TEST_CASE("descent finds the smallest field") {
  const Cyclotomic half = Cyclotomic(make_rational(1, 2));
  CHECK((Cyclotomic::root_of_unity(4).pow(2) * half).descended().order() == 1);
  const Cyclotomic golden = Cyclotomic::root_of_unity(5) + Cyclotomic::root_of_unity(5, 4);
  CHECK(golden.lifted(60).descended().order() == 5);
  CHECK(Cyclotomic::root_of_unity(60, 20).descended().order() == 3);
  CHECK(!Cyclotomic::root_of_unity(8).lowered(4).has_value());
}

TEST_CASE("galois action is a field automorphism") {
  std::mt19937 rng(3);
  const long m = 60;
  for (long k : {7L, 11L, 59L}) {
    const Cyclotomic a = test::random_cyclotomic(rng, m);
    const Cyclotomic b = test::random_cyclotomic(rng, m);
    CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
    CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
  }
  // Rational iff fixed by every automorphism.
  const Cyclotomic r = Cyclotomic::root_of_unity(5) + Cyclotomic::root_of_unity(5, 4);
  CHECK(r.galois(2) != r);
  CHECK(r.conjugate() == r);
}

TEST_CASE("square roots from Gauss sums") {
  for (long n : {2L, 3L, 5L, 6L, 7L, 15L, 30L}) {
    CAPTURE(n);
    const Cyclotomic s = sqrt_integer(n);
    CHECK(s * s == Cyclotomic(n));
    CHECK(s.to_complex().real() > 0);
    CHECK(std::abs(s.to_complex().imag()) < 1e-12);
  }
  CHECK(sqrt_integer(1) == Cyclotomic(1));
  CHECK_THROWS_AS(sqrt_integer(0), ArithmeticError);
  CHECK_THROWS_AS(sqrt_integer(12), ArithmeticError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(euler_phi(60) == 16);
  CHECK(euler_phi(1) == 1);
  const auto phi12 = cyclotomic_polynomial(12);  // 1 - x^2 + x^4
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == 1);
  CHECK(phi12[2] == -1);
  CHECK(phi12[4] == 1);
}

TEST_CASE("rendering round-trips through the scalar parser") {
  std::mt19937 rng(11);
  for (long m : kOrders) {
    const Cyclotomic a = test::random_cyclotomic(rng, m);
    CHECK(parse_scalar(a.to_string()) == a);
  }
  CHECK(Cyclotomic(make_rational(-3, 4)).to_string() == "-3/4");
  CHECK((Cyclotomic::root_of_unity(5, 2) * Cyclotomic(make_rational(-1, 2))).to_string() == "-1/2*E(5)^2");
}

TEST_CASE("scalar parser") {
  CHECK(parse_scalar("2^-2") == Cyclotomic(make_rational(1, 4)));
  CHECK(parse_scalar("-(1+E(4))*(1-E(4))") == Cyclotomic(-2));
  CHECK(parse_scalar(" Sqrt(15) / 4 ") * parse_scalar("Sqrt(15)/4") == Cyclotomic(make_rational(15, 16)));
  CHECK(parse_scalar("E(3)^2") == Cyclotomic::root_of_unity(3, 2));
  CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
  CHECK_THROWS_AS(parse_scalar("E(0)"), Error);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  try {
    parse_scalar("1 + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

}  // TEST_SUITE
