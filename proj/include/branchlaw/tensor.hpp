#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "branchlaw/character_table.hpp"
#include "branchlaw/check.hpp"
#include "branchlaw/group.hpp"

namespace branchlaw {

using IntMatrix = std::vector<std::vector<long>>;

/// Multiplicity matrices of tensoring with gamma (a1), its exterior square
/// (a2) and its dual (a3): column j decomposes gamma_j (x) ... into
/// irreducibles. l1..l3 are the eigenvalues on the character-table columns,
/// indexed by class.
struct TensorMatrices {
  IntMatrix a1;
  IntMatrix a2;
  IntMatrix a3;
  std::vector<Cyclotomic> l1;  // conj(chi(g_j))
  std::vector<Cyclotomic> l2;  // (chi(g_j)^2 - chi(g_j^2)) / 2
  std::vector<Cyclotomic> l3;  // chi(g_j)

  std::size_t size() const noexcept { return a1.size(); }
};

/// Throws PipelineError if any multiplicity is not a non-negative integer.
TensorMatrices build_tensor_matrices(const CharacterTable& t, const GroupData& g);

/// A3 = transpose(A1), A2 symmetric, pairwise commutation, simultaneous
/// eigenvectors (character-table columns) and the decomposition of gamma in
/// column 0 of A1.
CheckList check_tensor_structure(const TensorMatrices& m, const CharacterTable& t);

IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
long rank(const IntMatrix& a);

/// McKay quiver of A1 in Graphviz dot: a1_ij parallel edges j -> i.
std::string mckay_graph_dot(const TensorMatrices& m);
std::string format_matrix(const IntMatrix& a);

/// A permutation s with computed[s(i)][s(j)] == expected[i][j] for every
/// matrix pair, found by exhaustive search (at most 8 indices).
std::optional<std::vector<std::size_t>> find_relabeling(
    const std::vector<std::pair<const IntMatrix*, const IntMatrix*>>& pairs);

}  // namespace branchlaw
