#pragma once

// Published values for the order-60 type II subgroup of SL4, used as golden
// data. Matrices are in the canonical irreducible order produced by the
// library (trivial first, then by degree).

#include <string>
#include <utility>
#include <vector>

#include "branchlaw/poly.hpp"
#include "branchlaw/tensor.hpp"

namespace reference {

inline const branchlaw::IntMatrix kTypeIIA1 = {
    {0, 0, 0, 1, 0},
    {0, 0, 1, 1, 1},
    {0, 1, 0, 1, 1},
    {1, 1, 1, 1, 1},
    {0, 1, 1, 1, 2},
};

inline const branchlaw::IntMatrix kTypeIIA2 = {
    {0, 1, 1, 0, 0},
    {1, 1, 0, 1, 2},
    {1, 0, 1, 1, 2},
    {0, 1, 1, 2, 2},
    {0, 2, 2, 2, 2},
};

inline constexpr int kTypeIIOrder = 60;
inline constexpr int kTypeIIClasses = 5;
inline const std::vector<long> kTypeIIDegrees = {1, 3, 3, 4, 5};

// Eigenvalue multisets of A1 (= conjugate of A3's) and A2.
inline const std::vector<std::string> kTypeIITheta1 = {"4", "0", "-1", "1", "-1"};
inline const std::vector<std::string> kTypeIITheta2 = {"6", "-2", "1", "0", "1"};

// Poincare series of the invariant ring: numerator / denominator, ascending
// coefficients in t.
inline const std::vector<long> kInvariantNumerator = {1, 0, -1, 0, 1, 0, -1, 0, 1};
inline const std::vector<long> kInvariantDenominator = {1, 0, -2, -1, 1, 1, 0, 1, 1, -1, -2, 0, 1};

struct Factor {
  branchlaw::Var var;
  std::vector<long> coeffs;  // ascending
  int mult;
};

// Published common denominator of P for type II, as printed (monic factors).
inline const std::vector<Factor> kTypeIIDenominator = {
    {branchlaw::Var::kW, {-1, 1}, 4},       {branchlaw::Var::kU, {1, 1}, 3},
    {branchlaw::Var::kU, {-1, 1}, 5},       {branchlaw::Var::kT, {-1, 1}, 4},
    {branchlaw::Var::kW, {1, 1, 1}, 1},     {branchlaw::Var::kW, {1, 1, 1, 1, 1}, 1},
    {branchlaw::Var::kW, {1, 1}, 2},        {branchlaw::Var::kU, {1, 1, 1, 1, 1}, 1},
    {branchlaw::Var::kU, {1, 1, 1}, 2},     {branchlaw::Var::kT, {1, 1, 1}, 1},
    {branchlaw::Var::kT, {1, 1, 1, 1, 1}, 1}, {branchlaw::Var::kT, {1, 1}, 2},
};

// (t-1)^4 (t+1)^2 (t^2+t+1)(t^4+t^3+t^2+t+1): the per-variable block.
inline const std::vector<Factor> kTypeIIBlock = {
    {branchlaw::Var::kT, {-1, 1}, 4},
    {branchlaw::Var::kT, {1, 1}, 2},
    {branchlaw::Var::kT, {1, 1, 1}, 1},
    {branchlaw::Var::kT, {1, 1, 1, 1, 1}, 1},
};

inline branchlaw::UniPoly uni(branchlaw::Var v, const std::vector<long>& coeffs) {
  std::vector<branchlaw::Cyclotomic> c;
  for (long x : coeffs) c.emplace_back(x);
  return branchlaw::UniPoly(v, std::move(c));
}

/// Product of the listed factors in variable v.
inline branchlaw::UniPoly expand(const std::vector<Factor>& factors, branchlaw::Var v) {
  branchlaw::UniPoly out = uni(v, {1});
  for (const auto& f : factors) {
    if (f.var == v) out = out * branchlaw::pow(uni(v, f.coeffs), f.mult);
  }
  return out;
}

/// The published invariant-ring quotient as a rational function in t.
inline branchlaw::RatFun invariant_series() {
  branchlaw::FactoredDen den;
  den.multiply(uni(branchlaw::Var::kT, kInvariantDenominator));
  return branchlaw::RatFun(uni(branchlaw::Var::kT, kInvariantNumerator).to_multipoly(), den);
}

}  // namespace reference
