#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "branchlaw/matrix4.hpp"

namespace branchlaw {

/// A matrix in SL4 over a cyclotomic field. The determinant-1 condition is
/// checked by closure() for generators and is preserved by products.
using GroupElement = Matrix4;

inline constexpr std::size_t kDefaultClosureCap = 20000;

/// Enumerated finite matrix group with its conjugacy-class structure.
///
/// Elements are in BFS insertion order (element 0 is the identity). Classes
/// are ordered canonically: the identity class first, then by ascending
/// (element order, class size, trace coefficient vector), remaining ties by
/// the BFS index of the representative. The representative of a class is its
/// element of smallest index.
class GroupData {
 public:
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t num_classes() const noexcept { return class_reps_.size(); }
  long exponent() const noexcept { return exponent_; }
  /// Cyclotomic order at which all element entries are stored.
  long entry_order() const noexcept { return entry_order_; }

  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  std::size_t inverse_of(std::size_t i) const { return inverse_.at(i); }
  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }
  std::size_t class_rep(std::size_t j) const { return class_reps_.at(j); }
  const std::vector<std::size_t>& class_members(std::size_t j) const { return members_.at(j); }
  std::size_t class_size(std::size_t j) const { return members_.at(j).size(); }
  std::vector<std::size_t> class_sizes() const;
  /// Order of the elements of class j.
  long class_element_order(std::size_t j) const { return class_orders_.at(j); }
  const std::vector<long>& class_element_orders() const noexcept { return class_orders_; }
  /// Class of g_j^n; depends only on n mod the element order.
  std::size_t power_class(std::size_t j, long n) const;

  /// Index of an element given at entry_order(), or npos.
  std::size_t index_of(const GroupElement& g) const;
  std::size_t product_index(std::size_t a, std::size_t b) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend GroupData closure(std::span<const GroupElement> generators, std::size_t cap);

  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, Matrix4Hash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_reps_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<long> class_orders_;
  std::vector<std::vector<std::size_t>> power_table_;
  long exponent_ = 1;
  long entry_order_ = 1;
};

/// Breadth-first closure from the identity under right multiplication by the
/// generators, in generator order. Throws GroupError on a singular or
/// non-unimodular generator, or when more than `cap` elements appear.
GroupData closure(std::span<const GroupElement> generators, std::size_t cap = kDefaultClosureCap);

/// Class-algebra structure constants for class i: entry (j, k) counts the
/// pairs (a, b) in C_i x C_j with a*b = g_k.
std::vector<std::vector<long>> class_mult_coeffs(const GroupData& g, std::size_t i);

/// class_mult_coeffs for every class, computed in parallel.
std::vector<std::vector<std::vector<long>>> all_class_mult_coeffs(const GroupData& g);
/// Sequential reference for all_class_mult_coeffs.
std::vector<std::vector<std::vector<long>>> all_class_mult_coeffs_serial(const GroupData& g);

/// chi(g_j) = trace of the class representative, in smallest-field form.
std::vector<Cyclotomic> natural_character(const GroupData& g);

/// Character of the exterior square: (chi(g_j)^2 - chi(g_j^2)) / 2.
std::vector<Cyclotomic> exterior_square_character(const GroupData& g,
                                                  std::span<const Cyclotomic> chi);

/// A group as read from a generator file or a built-in name.
struct GroupSource {
  std::string name;
  std::size_t order_hint = 0;  // 0: unknown
  std::vector<GroupElement> generators;
  std::vector<std::size_t> generator_lines;  // source line of each generator, if read from text
};

/// Generator file format:
///
///   # comments and blank lines are ignored
///   <order-hint>                      (0 if unknown)
///   a11, a12, a13, a14; a21, ...; ...; a41, ..., a44
///
/// One generator per line; rows separated by ';', entries by ','. Sixteen
/// ';'-separated entries are also accepted. Entries use the scalar grammar.
GroupSource parse_group_text(std::string_view text, const std::string& source_name);
GroupSource read_group_file(const std::string& path);

/// Built-in groups: "trivial", "cyclic4", "typeII".
GroupSource builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// closure() plus the order-hint check.
GroupData build_group(const GroupSource& source, std::size_t cap = kDefaultClosureCap);

}  // namespace branchlaw
