#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchlaw/poly.hpp"

namespace branchlaw {

/// m_i(p, q, r) for every (p, q, r) with p + q + r <= max_degree, keyed by the
/// exponent triple; each vector is indexed by the irreducible character.
struct MultiplicityTable {
  int max_degree = 0;
  std::string method;
  std::map<Monomial, std::vector<long>> values;

  const std::vector<long>& at(int p, int q, int r) const { return values.at(Monomial{p, q, r}); }
};

/// Every (p, q, r) with p + q + r <= n, ordered by total degree then lex.
std::vector<Monomial> triples_up_to(int n);

/// Triples where the two tables differ (both must cover degree n).
std::vector<Monomial> table_mismatches(const MultiplicityTable& a, const MultiplicityTable& b, int n);

}  // namespace branchlaw
