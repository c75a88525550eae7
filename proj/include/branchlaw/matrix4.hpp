#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "branchlaw/cyclotomic.hpp"

namespace branchlaw {

/// 4x4 matrix over cyclotomic numbers, row-major.
class Matrix4 {
 public:
  using Entries = std::array<Cyclotomic, 16>;

  Matrix4() = default;
  explicit Matrix4(Entries entries) : e_(std::move(entries)) {}

  static Matrix4 identity();
  static Matrix4 diagonal(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                          const Cyclotomic& d);

  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return e_[4 * r + c]; }
  Cyclotomic& operator()(std::size_t r, std::size_t c) { return e_[4 * r + c]; }
  const Entries& entries() const noexcept { return e_; }

  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
  Matrix4 scaled(const Cyclotomic& s) const;

  Cyclotomic trace() const;
  Cyclotomic determinant() const;
  /// Adjugate; equals the inverse when the determinant is 1.
  Matrix4 adjugate() const;

  /// lcm of the orders at which the entries are stored.
  long entry_order() const;
  /// Every entry re-expressed at `order`.
  Matrix4 lifted(long order) const;

  friend bool operator==(const Matrix4& a, const Matrix4& b) { return a.e_ == b.e_; }

  /// Consistent with == only when both matrices store entries at one order.
  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  Entries e_{};
};

struct Matrix4Hash {
  std::size_t operator()(const Matrix4& m) const noexcept { return m.hash(); }
};

}  // namespace branchlaw
