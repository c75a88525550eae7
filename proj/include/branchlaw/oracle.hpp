#pragma once

#include <vector>

#include "branchlaw/character_table.hpp"
#include "branchlaw/check.hpp"
#include "branchlaw/group.hpp"
#include "branchlaw/multiplicity.hpp"
#include "branchlaw/tensor.hpp"

namespace branchlaw {

/// Dimension of the SL4 irreducible with highest weight (p, q, r).
long weyl_dim(long p, long q, long r);

/// Multiplicities from the tensor-product recurrences
///   A1 v(p,q,r) = v(p+1,q,r) + v(p,q,r-1) + v(p-1,q+1,r) + v(p,q-1,r+1)
///   A2 v(p,q,r) = v(p,q+1,r) + v(p,q-1,r) + v(p+1,q-1,r+1) + v(p-1,q+1,r-1)
///                 + v(p-1,q,r+1) + v(p+1,q,r-1)
///   A3 v(p,q,r) = v(p,q,r+1) + v(p-1,q,r) + v(p,q+1,r-1) + v(p+1,q-1,r)
/// solved level by level from v(0,0,0) = e_0. Throws PipelineError if an
/// entry comes out negative.
MultiplicityTable cg_table(const TensorMatrices& m, int n);

/// Character of the irreducible (p, q, r) on every class, from the
/// Jacobi-Trudi determinant in the complete symmetric functions of the
/// eigenvalues. Needs h_k for k <= p + q + r + 3.
std::vector<Cyclotomic> schur_character(const std::vector<std::vector<Cyclotomic>>& h, int p, int q, int r);

/// h_k(g_j) for k <= kmax and every class, from 1/det(1 - t g).
std::vector<std::vector<Cyclotomic>> complete_symmetric(const GroupData& g, int kmax);

/// Multiplicities by character inner products with the Schur characters;
/// independent of the tensor matrices. Triples run in parallel.
MultiplicityTable schur_table(const CharacterTable& t, const GroupData& g, int n);
/// Sequential reference for schur_table.
MultiplicityTable schur_table_serial(const CharacterTable& t, const GroupData& g, int n);

struct KeyRelationReport {
  struct Entry {
    Monomial monomial;
    bool passed = true;
    std::size_t coordinate = 0;  // first mismatching coordinate when !passed
  };
  int max_degree = 0;
  std::vector<Entry> entries;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Checks J e_0 = K(t,u,w) P coefficientwise against the table, where
///   K = (1 - tA1 + t^2A2 - t^3A3 + t^4)(1 - wA3 + w^2A2 - w^3A1 + w^4)
///       ((1+u^2)(1-u^2)^2 - u(1-u^2)^2 A2 + u^2 (A1 - uA3)(A3 - uA1)).
/// K has no negative exponents, so the coefficient at a monomial of total
/// degree d only involves table entries of degree <= d: every monomial with
/// total degree <= n is checked exactly.
KeyRelationReport key_relation_check(const TensorMatrices& m, const MultiplicityTable& table, int n);

/// sum_i m_i deg_i = weyl_dim at every triple of the table.
Check check_conservation(const MultiplicityTable& table, const std::vector<long>& degrees);

/// Dimension counts of the three tensor-product rules for p, q, r <= bound.
CheckList check_tensor_rule_dimensions(int bound);

}  // namespace branchlaw
