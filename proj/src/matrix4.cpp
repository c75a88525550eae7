#include "branchlaw/matrix4.hpp"

#include <numeric>
#include <sstream>

namespace branchlaw {

Matrix4 Matrix4::identity() { return diagonal(1, 1, 1, 1); }

Matrix4 Matrix4::diagonal(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                          const Cyclotomic& d) {
  Matrix4 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      Cyclotomic acc = a(r, 0) * b(0, c);
      for (std::size_t k = 1; k < 4; ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        acc += a(r, k) * b(k, c);
      }
      out(r, c) = std::move(acc);
    }
  }
  return out;
}

Matrix4 Matrix4::scaled(const Cyclotomic& s) const {
  Matrix4 out = *this;
  for (auto& v : out.e_) v *= s;
  return out;
}

Cyclotomic Matrix4::trace() const {
  return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
}

namespace {

// 2x2 minors of a row pair, in column-pair order 01 02 03 12 13 23.
std::array<Cyclotomic, 6> pair_minors(const Matrix4& m, std::size_t r0, std::size_t r1) {
  static constexpr std::array<std::array<std::size_t, 2>, 6> kPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::array<Cyclotomic, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [c0, c1] = kPairs[i];
    out[i] = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  }
  return out;
}

}  // namespace

Cyclotomic Matrix4::determinant() const {
  // Laplace expansion along the first two rows.
  const auto s = pair_minors(*this, 0, 1);
  const auto c = pair_minors(*this, 2, 3);
  return s[0] * c[5] - s[1] * c[4] + s[2] * c[3] + s[3] * c[2] - s[4] * c[1] + s[5] * c[0];
}

Matrix4 Matrix4::adjugate() const {
  const Matrix4& m = *this;
  const auto s = pair_minors(m, 0, 1);
  const auto c = pair_minors(m, 2, 3);
  Matrix4 a;
  a(0, 0) = m(1, 1) * c[5] - m(1, 2) * c[4] + m(1, 3) * c[3];
  a(0, 1) = -m(0, 1) * c[5] + m(0, 2) * c[4] - m(0, 3) * c[3];
  a(0, 2) = m(3, 1) * s[5] - m(3, 2) * s[4] + m(3, 3) * s[3];
  a(0, 3) = -m(2, 1) * s[5] + m(2, 2) * s[4] - m(2, 3) * s[3];

  a(1, 0) = -m(1, 0) * c[5] + m(1, 2) * c[2] - m(1, 3) * c[1];
  a(1, 1) = m(0, 0) * c[5] - m(0, 2) * c[2] + m(0, 3) * c[1];
  a(1, 2) = -m(3, 0) * s[5] + m(3, 2) * s[2] - m(3, 3) * s[1];
  a(1, 3) = m(2, 0) * s[5] - m(2, 2) * s[2] + m(2, 3) * s[1];

  a(2, 0) = m(1, 0) * c[4] - m(1, 1) * c[2] + m(1, 3) * c[0];
  a(2, 1) = -m(0, 0) * c[4] + m(0, 1) * c[2] - m(0, 3) * c[0];
  a(2, 2) = m(3, 0) * s[4] - m(3, 1) * s[2] + m(3, 3) * s[0];
  a(2, 3) = -m(2, 0) * s[4] + m(2, 1) * s[2] - m(2, 3) * s[0];

  a(3, 0) = -m(1, 0) * c[3] + m(1, 1) * c[1] - m(1, 2) * c[0];
  a(3, 1) = m(0, 0) * c[3] - m(0, 1) * c[1] + m(0, 2) * c[0];
  a(3, 2) = -m(3, 0) * s[3] + m(3, 1) * s[1] - m(3, 2) * s[0];
  a(3, 3) = m(2, 0) * s[3] - m(2, 1) * s[1] + m(2, 2) * s[0];
  return a;
}

long Matrix4::entry_order() const {
  long order = 1;
  for (const auto& v : e_) order = std::lcm(order, v.order());
  return order;
}

Matrix4 Matrix4::lifted(long order) const {
  Matrix4 out;
  for (std::size_t i = 0; i < 16; ++i) out.e_[i] = e_[i].lifted(order);
  return out;
}

std::size_t Matrix4::hash() const noexcept {
  std::size_t h = 0;
  for (const auto& v : e_) h = h * 31u + v.hash();
  return h;
}

std::string Matrix4::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < 4; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < 4; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).descended().to_string();
    }
  }
  return os.str();
}

}  // namespace branchlaw
