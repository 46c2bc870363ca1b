#pragma once

#include <cstdint>
#include <vector>

namespace cycgroup {

/// GF(q) for small q = p^k. Elements are 0..q-1, read as base-p coefficient
/// vectors (digit i is the coefficient of x^i) modulo a fixed irreducible polynomial:
///
///   q = 4   x^2 + x + 1
///   q = 8   x^3 + x + 1
///   q = 9   x^2 + x + 2
///   q = 16  x^4 + x + 1
///
/// Prime q uses integers mod q.
class FiniteField {
public:
  explicit FiniteField(unsigned q);

  unsigned size() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned e) const;
  /// x -> x^p
  unsigned frobenius(unsigned a) const { return pow(a, p_); }
  /// Least generator of the multiplicative group.
  unsigned primitive_element() const { return primitive_; }

  /// Coefficients (constant term first) of the defining polynomial; {0, 1} for prime fields.
  std::vector<unsigned> modulus() const { return modulus_; }

private:
  unsigned q_, p_, k_;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
  unsigned primitive_ = 1;
};

/// GF(2^m) for 2 <= m <= 12 with a fixed irreducible polynomial per degree
/// (bit i of the mask is the coefficient of x^i):
///
///   m:   2     3     4      5      6      7      8      9      10     11     12
///   0x7  0xB   0x13   0x25   0x43   0x83   0x11B  0x211  0x409  0x805  0x1053
///
/// Addition is XOR; multiplication is carry-less modulo the polynomial.
class BinaryField {
public:
  explicit BinaryField(unsigned m);

  unsigned degree() const { return m_; }
  std::uint32_t size() const { return 1u << m_; }
  std::uint32_t modulus() const { return poly_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Some element of multiplicative order exactly `order`; `order` must divide 2^m - 1.
  std::uint32_t element_of_order(std::uint64_t order) const;

  static std::uint32_t polynomial_for(unsigned m);

private:
  unsigned m_;
  std::uint32_t poly_;
};

}  // namespace cycgroup
