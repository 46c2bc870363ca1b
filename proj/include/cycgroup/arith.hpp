#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycgroup {

/// Arbitrary-precision integer; also used for non-negative quantities such as |G|^n.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

using u64 = std::uint64_t;

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

u64 euler_phi(u64 n);
int moebius(u64 n);

/// Divisors of n in ascending order.
std::vector<u64> divisors(u64 n);

bool is_prime(u64 n);
u64 lcm(u64 a, u64 b);

/// Least k >= 1 with base^k = 1 (mod m); requires gcd(base, m) = 1 and m > 1.
u64 multiplicative_order(u64 base, u64 m);

Rational make_rational(const Integer& num, const Integer& den);

/// Always "num/den", including "1/1".
std::string to_fraction_string(const Rational& q);

/// Parses "num/den" or "num".
Rational parse_fraction(const std::string& text);

/// Decimal rendering with `places` digits, rounded half to even. For display only.
std::string to_decimal_string(const Rational& q, unsigned places = 6);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

/// Converts an exact rational that must be an integer; throws std::domain_error otherwise.
Integer require_integer(const Rational& q, const char* what);

}  // namespace cycgroup
