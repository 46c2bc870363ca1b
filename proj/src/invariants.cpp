#include "cycgroup/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cycgroup/structure.hpp"

namespace cycgroup {

Integer OrderSpectrum::count(u64 d) const
{
  const auto it = counts.find(d);
  return it == counts.end() ? Integer(0) : it->second;
}

u64 OrderSpectrum::exponent() const
{
  u64 e = 1;
  for (const auto& [d, r] : counts)
    if (r != 0)
      e = lcm(e, d);
  return e;
}

void OrderSpectrum::validate() const
{
  Integer total = 0;
  for (const auto& [d, r] : counts) {
    if (d == 0 || r < 0)
      throw std::domain_error("invalid spectrum entry");
    if (r != 0 && group_order % d != 0)
      throw std::domain_error("spectrum order " + std::to_string(d) + " does not divide the group order");
    total += r;
  }
  if (total != group_order)
    throw std::domain_error("spectrum counts sum to " + total.str() + ", expected " + group_order.str());
  if (count(1) != 1)
    throw std::domain_error("spectrum must contain exactly one element of order 1");
}

OrderSpectrum order_spectrum(const FiniteGroup& g)
{
  std::map<u64, u64> tally;
  for (u64 o : g.element_orders())
    ++tally[o];
  OrderSpectrum s;
  s.group_order = g.order();
  for (const auto& [d, r] : tally)
    s.counts[d] = r;
  return s;
}

OrderSpectrum cyclic_spectrum(u64 n)
{
  OrderSpectrum s;
  s.group_order = n;
  for (u64 d : divisors(n))
    s.counts[d] = euler_phi(d);
  return s;
}

Integer B(const OrderSpectrum& s, u64 d)
{
  Integer total = 0;
  for (const auto& [l, r] : s.counts)
    if (d % l == 0)
      total += r;
  return total;
}

Integer c_direct(const OrderSpectrum& s)
{
  Rational total = 0;
  for (const auto& [d, r] : s.counts)
    total += Rational(r) / euler_phi(d);
  return require_integer(total, "c");
}

Integer c_moebius(const OrderSpectrum& s)
{
  const u64 n = s.group_order.convert_to<u64>();
  Rational total = 0;
  for (u64 d : divisors(n)) {
    Rational weight = 0;
    for (u64 i : divisors(n / d)) {
      const int mu = moebius(i);
      if (mu != 0)
        weight += Rational(mu) / euler_phi(d * i);
    }
    total += weight * B(s, d);
  }
  return require_integer(total, "c");
}

Integer c_nilpotent(const OrderSpectrum& s)
{
  const u64 n = s.group_order.convert_to<u64>();
  Rational total = 0;
  for (u64 d : divisors(n))
    total += Rational(B(s, d)) / d;
  return require_integer(total, "c");
}

Integer r_from_B(u64 l, const std::vector<Integer>& b_values)
{
  const auto divs = divisors(l);
  if (b_values.size() != divs.size())
    throw std::invalid_argument("r_from_B: expected one B value per divisor of " + std::to_string(l));
  Integer r = 0;
  for (std::size_t i = 0; i < divs.size(); ++i)
    r += moebius(l / divs[i]) * b_values[i];
  return r;
}

Integer involution_count(const OrderSpectrum& s)
{
  return s.count(1) + s.count(2);
}

Rational alpha(const OrderSpectrum& s)
{
  return make_rational(c_direct(s), s.group_order);
}

Rational commuting_probability(const FiniteGroup& g)
{
  return make_rational(class_count(g), g.order());
}

Rational commuting_probability_pairs(const FiniteGroup& g)
{
  const std::size_t n = g.order();
  if (n > 512)
    throw SizeLimitError("size limit: pair-count commuting probability needs |G| <= 512");
  g.prepare_table();
  u64 pairs = 0;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x))
        ++pairs;
  return make_rational(pairs, Integer(n) * n);
}

InvariantFingerprint fingerprint(const FiniteGroup& g, const Limits& limits)
{
  const OrderSpectrum s = order_spectrum(g);
  s.validate();
  InvariantFingerprint f;
  f.label = g.label();
  f.order = g.order();
  f.c = c_direct(s);
  if (c_moebius(s) != f.c)
    throw std::logic_error("formula disagreement on '" + g.label() + "': c_direct != c_moebius");
  f.alpha = make_rational(f.c, f.order);
  f.involutions = involution_count(s);
  f.classes = class_count(g);
  f.cp = make_rational(f.classes, f.order);
  f.exponent = s.exponent();
  f.abelian = is_abelian(g);
  f.nilpotent = f.abelian || is_nilpotent(g);
  f.solvable = f.nilpotent || is_solvable(g);
  if (f.nilpotent && c_nilpotent(s) != f.c)
    throw std::logic_error("formula disagreement on '" + g.label() + "': c_direct != c_nilpotent");
  if (g.order() <= limits.lattice_limit)
    f.supersolvable = is_supersolvable(g, limits);
  return f;
}

namespace {

nlohmann::ordered_json integer_json(const Integer& v)
{
  if (v >= 0 && v <= std::numeric_limits<u64>::max())
    return v.convert_to<u64>();
  return v.str();
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string flag(const std::optional<bool>& b)
{
  return b ? (*b ? "true" : "false") : "";
}

}  // namespace

std::string fingerprint_json(const InvariantFingerprint& f)
{
  nlohmann::ordered_json j;
  j["label"] = f.label;
  j["order"] = integer_json(f.order);
  j["c"] = integer_json(f.c);
  j["alpha"] = to_fraction_string(f.alpha);
  j["involutions"] = integer_json(f.involutions);
  j["classes"] = f.classes;
  j["cp"] = to_fraction_string(f.cp);
  j["exponent"] = f.exponent;
  j["abelian"] = f.abelian;
  j["nilpotent"] = f.nilpotent;
  j["solvable"] = f.solvable;
  j["supersolvable"] = f.supersolvable ? nlohmann::ordered_json(*f.supersolvable) : nullptr;
  return j.dump();
}

std::string fingerprint_csv_header()
{
  return "label,order,c,alpha,involutions,classes,cp,exponent,abelian,nilpotent,solvable,supersolvable";
}

std::string fingerprint_csv(const InvariantFingerprint& f)
{
  std::ostringstream out;
  out << csv_field(f.label) << ',' << f.order << ',' << f.c << ',' << to_fraction_string(f.alpha) << ','
      << f.involutions << ',' << f.classes << ',' << to_fraction_string(f.cp) << ',' << f.exponent << ','
      << flag(f.abelian) << ',' << flag(f.nilpotent) << ',' << flag(f.solvable) << ','
      << flag(f.supersolvable);
  return out.str();
}

std::string fingerprint_pretty(const InvariantFingerprint& f)
{
  std::ostringstream out;
  out << "group          " << f.label << '\n'
      << "order          " << f.order << '\n'
      << "c              " << f.c << '\n'
      << "alpha          " << to_fraction_string(f.alpha) << "  (" << to_decimal_string(f.alpha) << ")\n"
      << "involutions    " << f.involutions << '\n'
      << "classes        " << f.classes << '\n'
      << "cp             " << to_fraction_string(f.cp) << '\n'
      << "exponent       " << f.exponent << '\n'
      << "abelian        " << flag(f.abelian) << '\n'
      << "nilpotent      " << flag(f.nilpotent) << '\n'
      << "solvable       " << flag(f.solvable) << '\n'
      << "supersolvable  " << (f.supersolvable ? flag(f.supersolvable) : "not computed") << '\n';
  return out.str();
}

}  // namespace cycgroup
