#include "cycgroup/field.hpp"

#include <stdexcept>
#include <string>

#include "cycgroup/arith.hpp"

namespace cycgroup {

namespace {

struct FieldShape {
  unsigned q, p, k;
  std::vector<unsigned> modulus;  // monic, constant term first
};

FieldShape shape_for(unsigned q)
{
  switch (q) {
  case 4: return {4, 2, 2, {1, 1, 1}};
  case 8: return {8, 2, 3, {1, 1, 0, 1}};
  case 9: return {9, 3, 2, {2, 1, 1}};
  case 16: return {16, 2, 4, {1, 1, 0, 0, 1}};
  default:
    if (is_prime(q) && q < 1000)
      return {q, q, 1, {0, 1}};
  }
  throw std::invalid_argument("unsupported field order " + std::to_string(q));
}

std::vector<unsigned> digits(unsigned a, unsigned p, unsigned k)
{
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p)
{
  unsigned a = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    a = a * p + d[i];
  return a;
}

}  // namespace

FiniteField::FiniteField(unsigned q)
{
  FieldShape shape = shape_for(q);
  q_ = shape.q;
  p_ = shape.p;
  k_ = shape.k;
  modulus_ = shape.modulus;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (unsigned a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, k_);
    std::vector<unsigned> dn(k_);
    for (unsigned i = 0; i < k_; ++i)
      dn[i] = (p_ - da[i]) % p_;
    neg_[a] = from_digits(dn, p_);
    for (unsigned b = 0; b < q_; ++b) {
      const auto db = digits(b, p_, k_);
      std::vector<unsigned> sum(k_);
      for (unsigned i = 0; i < k_; ++i)
        sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = from_digits(sum, p_);

      std::vector<unsigned> prod(2 * k_, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      // Reduce using x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1}).
      for (unsigned deg = 2 * k_ - 2; deg >= k_ && k_ > 1; --deg) {
        const unsigned c = prod[deg];
        if (c == 0)
          continue;
        prod[deg] = 0;
        for (unsigned i = 0; i < k_; ++i)
          prod[deg - k_ + i] = (prod[deg - k_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
      prod.resize(k_);
      mul_[a * q_ + b] = from_digits(prod, p_);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul(a, b) == 1)
        inv_[a] = b;

  for (unsigned g = 1; g < q_; ++g) {
    unsigned x = g;
    unsigned ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

unsigned FiniteField::inv(unsigned a) const
{
  if (a == 0)
    throw std::domain_error("inverse of zero");
  return inv_[a];
}

unsigned FiniteField::pow(unsigned a, unsigned e) const
{
  unsigned r = 1;
  for (unsigned i = 0; i < e; ++i)
    r = mul(r, a);
  return r;
}

std::uint32_t BinaryField::polynomial_for(unsigned m)
{
  static constexpr std::uint32_t table[] = {0,     0,     0x7,   0xB,   0x13,  0x25,  0x43,
                                            0x83,  0x11B, 0x211, 0x409, 0x805, 0x1053};
  if (m < 2 || m > 12)
    throw std::invalid_argument("binary field degree must be in [2, 12], got " + std::to_string(m));
  return table[m];
}

BinaryField::BinaryField(unsigned m)
: m_(m), poly_(polynomial_for(m))
{}

std::uint32_t BinaryField::mul(std::uint32_t a, std::uint32_t b) const
{
  std::uint32_t r = 0;
  while (b) {
    if (b & 1)
      r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << m_))
      a ^= poly_;
  }
  return r;
}

std::uint32_t BinaryField::pow(std::uint32_t a, std::uint64_t e) const
{
  std::uint32_t r = 1;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t BinaryField::element_of_order(std::uint64_t order) const
{
  const std::uint64_t group = size() - 1;
  if (order == 0 || group % order != 0)
    throw std::invalid_argument("no element of order " + std::to_string(order) + " in GF(2^" +
                                std::to_string(m_) + ")*");
  const auto primes = factorize(order == 1 ? 2 : order);
  for (std::uint32_t h = 2; h < size(); ++h) {
    const std::uint32_t x = pow(h, group / order);
    if (pow(x, order) != 1)
      continue;
    bool exact = true;
    for (auto [q, e] : primes)
      if (order % q == 0 && pow(x, order / q) == 1)
        exact = false;
    if (exact)
      return x;
  }
  if (order == 1)
    return 1;
  throw std::logic_error("field polynomial is not irreducible");
}

}  // namespace cycgroup
