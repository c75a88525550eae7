#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "branchlaw/character_table.hpp"
#include "branchlaw/check.hpp"
#include "branchlaw/matrix_poly.hpp"
#include "branchlaw/multiplicity.hpp"
#include "branchlaw/poly.hpp"
#include "branchlaw/tensor.hpp"

namespace branchlaw {

inline constexpr const char* kPipelineVersion = "branchlaw 1.0";

/// J(t,u,w) = (1-u^2)((1+ut^2)(1+uw^2) - tw(1+u^2)) I + twu(1-u^2) A2
///            - tu(1+uw^2)(A3 - uA1) - wu(1+ut^2)(A1 - uA3).
MatrixPoly build_J(const TensorMatrices& m);

/// 1 - d1 t + d2 t^2 - d3 t^3 + t^4.
UniPoly t_quartic(const Cyclotomic& d1, const Cyclotomic& d2, const Cyclotomic& d3);
/// 1 - d3 w + d2 w^2 - d1 w^3 + w^4.
UniPoly w_quartic(const Cyclotomic& d1, const Cyclotomic& d2, const Cyclotomic& d3);
/// (1+u^2)(1-u^2)^2 - u(1-u^2)^2 d2 + u^2 (d1 - u d3)(d3 - u d1).
UniPoly u_sextic(const Cyclotomic& d1, const Cyclotomic& d2, const Cyclotomic& d3);

/// A univariate polynomial with constant term 1 written as
/// prod_k (1 - E(e)^k x)^roots[k] times whatever did not split.
struct SplitPoly {
  Var var = Var::kT;
  long exponent = 1;
  std::map<long, int> roots;
  FactoredDen remnant;

  UniPoly expanded() const;
};

/// Splits f over the e-th roots of unity by exact evaluation and deflation.
SplitPoly split_over_roots_of_unity(const UniPoly& f, long e);

/// The three denominator pieces of one diagonal entry of Delta.
struct DeltaFactors {
  SplitPoly t;
  SplitPoly u;
  SplitPoly w;

  /// 1 / (t-quartic * u-sextic * w-quartic), factored.
  RatFun as_ratfun() const;
};

/// Builds and splits the Delta entry for eigenvalues (d1, d2, d3) of
/// (A1, A2, A3). Throws PipelineError if a quartic does not split over the
/// e-th roots of unity; the sextic is allowed to keep an unsplit remnant.
DeltaFactors f_factor(const Cyclotomic& d1, const Cyclotomic& d2, const Cyclotomic& d3, long e);

struct BranchingSeries {
  std::vector<RatFun> coords;
  std::vector<std::string> irrep_labels;
  std::vector<long> degrees;
  std::string group;
  std::string version = kPipelineVersion;

  /// Factor-multiset lcm of the coordinate denominators.
  FactoredDen common_denominator() const;
};

/// P = T Delta T^{-1} J e_0, assembled over a common denominator made of
/// rational cyclotomic factors, with rational coefficients asserted and
/// cancellation applied. Classes are processed in parallel.
BranchingSeries compute_series(const CharacterTable& t, const TensorMatrices& m, const std::string& group);
/// Sequential reference for compute_series.
BranchingSeries compute_series_serial(const CharacterTable& t, const TensorMatrices& m,
                                      const std::string& group);

/// (1/|G|) sum_j |C_j| / det(1 - t g_j), with each det split into rational
/// cyclotomic factors where possible.
RatFun molien_series(const GroupData& g);

/// Taylor coefficients of every coordinate up to total degree n. Throws
/// PipelineError on any coefficient that is not a non-negative integer.
MultiplicityTable extract_multiplicities(const BranchingSeries& s, int n);

/// Constant terms e_0, nonzero denominators of rational cyclotomic factors.
CheckList check_series_invariants(const BranchingSeries& s);

/// Applies "var=value" substitutions in order.
RatFun specialize(const RatFun& f, const std::vector<std::pair<Var, Cyclotomic>>& assignments);
/// Parses "u=0,w=0" style assignment lists (values in the scalar grammar).
std::vector<std::pair<Var, Cyclotomic>> parse_assignments(std::string_view text);

}  // namespace branchlaw
