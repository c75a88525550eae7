#pragma once

#include <map>
#include <random>
#include <string>

#include "branchlaw/character_table.hpp"
#include "branchlaw/group.hpp"
#include "branchlaw/tensor.hpp"

namespace test {

/// Random element of Q(zeta_m) with small numerators and denominators.
inline branchlaw::Cyclotomic random_cyclotomic(std::mt19937& rng, long m) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<branchlaw::Rational> c;
  for (long i = 0; i < branchlaw::euler_phi(m); ++i) c.push_back(branchlaw::make_rational(num(rng), den(rng)));
  return branchlaw::Cyclotomic::from_coeffs(m, c);
}

/// Group, Dixon table and tensor matrices for a built-in group, built once.
struct Bundle {
  branchlaw::GroupData group;
  branchlaw::CharacterTable table;
  branchlaw::TensorMatrices tensors;
};

inline const Bundle& bundle(const std::string& name) {
  static std::map<std::string, Bundle> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    Bundle b;
    b.group = branchlaw::build_group(branchlaw::builtin_group(name));
    b.table = branchlaw::dixon_character_table(b.group);
    b.tensors = branchlaw::build_tensor_matrices(b.table, b.group);
    it = cache.emplace(name, std::move(b)).first;
  }
  return it->second;
}

}  // namespace test
