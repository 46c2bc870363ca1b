#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycgroup/arith.hpp"
#include "cycgroup/group.hpp"

namespace cycgroup {

/// Element-order census: counts[d] is the number of elements of order exactly d.
struct OrderSpectrum {
  std::map<u64, Integer> counts;
  Integer group_order = 1;

  Integer count(u64 d) const;
  /// lcm of the orders present.
  u64 exponent() const;
  /// Throws std::domain_error if the census is not a valid spectrum.
  void validate() const;

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
};

OrderSpectrum order_spectrum(const FiniteGroup& g);

/// Spectrum of a cyclic group of order n: phi(d) elements of each order d | n.
OrderSpectrum cyclic_spectrum(u64 n);

/// Number of x with x^d = 1.
Integer B(const OrderSpectrum& s, u64 d);

Integer c_direct(const OrderSpectrum& s);
Integer c_moebius(const OrderSpectrum& s);
/// Valid for nilpotent groups only.
Integer c_nilpotent(const OrderSpectrum& s);

/// r(l) from B on the divisors of l; `b_values[i]` is B(divisors(l)[i]).
Integer r_from_B(u64 l, const std::vector<Integer>& b_values);

/// I(G) = #{x : x^2 = 1}, identity included.
Integer involution_count(const OrderSpectrum& s);

Rational alpha(const OrderSpectrum& s);

/// k(G)/|G| from the conjugacy classes.
Rational commuting_probability(const FiniteGroup& g);
/// #{(x, y) : xy = yx} / |G|^2; requires |G| <= 512.
Rational commuting_probability_pairs(const FiniteGroup& g);

struct InvariantFingerprint {
  std::string label;
  Integer order;
  Integer c;
  Rational alpha;
  Integer involutions;
  std::size_t classes = 0;
  Rational cp;
  u64 exponent = 1;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  std::optional<bool> supersolvable;

  friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};

/// Computes every field and enforces c_direct = c_moebius (and = c_nilpotent when nilpotent).
/// Supersolvability is filled in only for orders within the lattice limit.
InvariantFingerprint fingerprint(const FiniteGroup& g, const Limits& limits = {});

/// Field order: label, order, c, alpha, involutions, classes, cp, exponent,
/// abelian, nilpotent, solvable, supersolvable (null when not computed).
std::string fingerprint_json(const InvariantFingerprint& f);
std::string fingerprint_csv_header();
std::string fingerprint_csv(const InvariantFingerprint& f);
std::string fingerprint_pretty(const InvariantFingerprint& f);

}  // namespace cycgroup
