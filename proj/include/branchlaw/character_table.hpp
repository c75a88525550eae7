#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "branchlaw/cyclotomic.hpp"
#include "branchlaw/group.hpp"

namespace branchlaw {

using CyclotomicMatrix = std::vector<std::vector<Cyclotomic>>;

/// Irreducible character table: entry (i, j) = chi_i(g_j), columns in the
/// canonical class order of the group, row 0 the trivial character.
struct CharacterTable {
  CyclotomicMatrix values;
  std::vector<long> degrees;
  std::vector<std::size_t> class_sizes;
  std::vector<long> class_orders;
  std::size_t group_order = 0;

  std::size_t size() const noexcept { return values.size(); }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return values[i][j]; }
  /// Column j as a vector (chi_0(g_j), ..., chi_l(g_j)).
  std::vector<Cyclotomic> column(std::size_t j) const;

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// Burnside-Dixon: simultaneous eigenvectors of the class matrices over F_p
/// with p = 1 mod exponent, lifted to cyclotomic values by discrete logs.
CharacterTable dixon_character_table(const GroupData& g);

/// The prime used by dixon_character_table for this group.
long dixon_prime(const GroupData& g);

/// Throws TableError (with a diagnostic naming the failing relation and
/// indices) unless both orthogonality relations hold exactly, degrees are
/// the first column, row 0 is trivial and sum of squared degrees is |G|.
void validate_table(const CharacterTable& t);

/// Rows sorted: trivial first, then degree ascending, then lexicographic
/// values across the class order.
CharacterTable canonicalized(CharacterTable t);

/// (T^{-1})_{jk} = |C_j| conj(chi_k(g_j)) / |G|; T * T^{-1} = I is checked.
CyclotomicMatrix inverse_table(const CharacterTable& t);

/// Text format:
///   line 1: l+1
///   line 2: class sizes
///   line 3: orders of the class representatives
///   then l+1 rows of scalar literals, whitespace separated
std::string save_table(const CharacterTable& t);
/// Parses and validates against the group's class data.
CharacterTable load_table(std::string_view text, const GroupData& g);

/// Multiplicity (psi | chi_i) of each irreducible in a class function psi.
std::vector<Cyclotomic> decompose(const CharacterTable& t, std::span<const Cyclotomic> psi);

}  // namespace branchlaw
