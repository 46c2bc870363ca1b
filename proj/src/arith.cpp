#include "cycgroup/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cycgroup {

namespace {

void require_positive(u64 n, const char* op)
{
  if (n == 0)
    throw std::invalid_argument(std::string(op) + ": argument must be positive");
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n)
{
  require_positive(n, "factorize");
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1u);
  return out;
}

u64 euler_phi(u64 n)
{
  require_positive(n, "euler_phi");
  u64 result = n;
  for (auto [p, e] : factorize(n))
    result = result / p * (p - 1);
  return result;
}

int moebius(u64 n)
{
  require_positive(n, "moebius");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1)
      return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<u64> divisors(u64 n)
{
  require_positive(n, "divisors");
  std::vector<u64> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(u64 n)
{
  if (n < 2)
    return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return false;
  return true;
}

u64 lcm(u64 a, u64 b)
{
  return a / std::gcd(a, b) * b;
}

u64 multiplicative_order(u64 base, u64 m)
{
  if (m < 2 || std::gcd(base, m) != 1)
    throw std::invalid_argument("multiplicative_order: base must be a unit modulo m > 1");
  u64 x = base % m;
  u64 k = 1;
  while (x != 1) {
    x = x * base % m;
    ++k;
  }
  return k;
}

Rational make_rational(const Integer& num, const Integer& den)
{
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  if (den < 0)
    return Rational(Integer(-num), Integer(-den));
  return Rational(num, den);
}

Integer numerator_of(const Rational& q)
{
  return boost::multiprecision::numerator(q);
}

Integer denominator_of(const Rational& q)
{
  return boost::multiprecision::denominator(q);
}

std::string to_fraction_string(const Rational& q)
{
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Rational parse_fraction(const std::string& text)
{
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  }
  catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed fraction '" + text + "'");
  }
}

std::string to_decimal_string(const Rational& q, unsigned places)
{
  Integer num = numerator_of(q);
  const Integer den = denominator_of(q);
  const bool negative = num < 0;
  if (negative)
    num = -num;

  Integer scale = 1;
  for (unsigned i = 0; i < places; ++i)
    scale *= 10;

  Integer scaled = num * scale;
  Integer quotient = scaled / den;
  const Integer twice_rem = 2 * (scaled % den);
  if (twice_rem > den || (twice_rem == den && quotient % 2 == 1))
    ++quotient;

  std::string digits = quotient.str();
  if (digits.size() <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0)
    out += "." + digits.substr(digits.size() - places);
  return out;
}

Integer require_integer(const Rational& q, const char* what)
{
  if (denominator_of(q) != 1)
    throw std::domain_error(std::string("non-integral ") + what + ": " + to_fraction_string(q));
  return numerator_of(q);
}

}  // namespace cycgroup
