#include "cycgroup/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "cycgroup/field.hpp"
#include "cycgroup/structure.hpp"

namespace cycgroup {

namespace {

void require(bool ok, const std::string& message)
{
  if (!ok)
    throw InputError(message);
}

void check_order(const FiniteGroup& g, const Integer& expected)
{
  if (Integer(g.order()) != expected)
    throw std::logic_error("internal consistency: '" + g.label() + "' has order " +
                           std::to_string(g.order()) + ", expected " + expected.str());
}

Integer factorial(unsigned m)
{
  Integer f = 1;
  for (unsigned i = 2; i <= m; ++i)
    f *= i;
  return f;
}

Permutation cycle_on(std::size_t degree, std::size_t start, std::size_t length)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < length; ++i)
    images[start + i] = static_cast<Point>(start + (i + 1) % length);
  return Permutation(std::move(images));
}

FiniteGroup close(std::vector<Permutation> gens, std::size_t degree, std::string label, const Limits& limits)
{
  return FiniteGroup::close_generators(gens, degree, std::move(label), limits);
}

/// (Z/p)^2 stored at a + p * b.
FiniteGroup plane(unsigned p, const Limits& limits)
{
  auto rule = [p](Index x, Index y) {
    return static_cast<Index>((x % p + y % p) % p + p * ((x / p + y / p) % p));
  };
  return FiniteGroup::from_rule(p * p, rule, {1, p}, "GF(" + std::to_string(p) + ")^2", limits);
}

/// Exponent k with cyclic-model element h = g^k (g the standard n-cycle).
unsigned cyclic_exponent(const FiniteGroup& c, Index h)
{
  return c.permutation(h)(0);
}

Limits with_cap(Limits limits, std::size_t cap)
{
  limits.size_cap = std::max(limits.size_cap, cap);
  return limits;
}

}  // namespace

FiniteGroup cyclic(unsigned n, const Limits& limits)
{
  require(n >= 1, "cyclic: n must be >= 1");
  auto g = close({cycle_on(n, 0, n)}, n, "c" + std::to_string(n), limits);
  check_order(g, n);
  return g;
}

FiniteGroup abelian(const std::vector<unsigned>& factors, const Limits& limits)
{
  require(!factors.empty(), "abelian: empty factor list");
  std::size_t degree = 0;
  Integer expected = 1;
  for (unsigned f : factors) {
    require(f >= 1, "abelian: factors must be >= 1");
    degree += f;
    expected *= f;
  }
  std::vector<Permutation> gens;
  std::size_t start = 0;
  std::string label = "abelian:";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    gens.push_back(cycle_on(degree, start, factors[i]));
    start += factors[i];
    label += (i ? "x" : "") + std::to_string(factors[i]);
  }
  auto g = close(gens, degree, label, limits);
  check_order(g, expected);
  return g;
}

FiniteGroup elementary_abelian(unsigned p, unsigned k, const Limits& limits)
{
  require(is_prime(p), "elementary_abelian: p must be prime");
  require(k >= 1, "elementary_abelian: k must be >= 1");
  return abelian(std::vector<unsigned>(k, p), limits)
    .relabeled("c" + std::to_string(p) + "^" + std::to_string(k));
}

FiniteGroup dihedral(unsigned order, const Limits& limits)
{
  require(order >= 2 && order % 2 == 0, "dihedral: order must be even and >= 2");
  const std::string label = "dihedral:" + std::to_string(order);
  const unsigned n = order / 2;
  FiniteGroup g;
  if (n == 1) {
    g = close({cycle_on(2, 0, 2)}, 2, label, limits);
  }
  else if (n == 2) {
    g = close({Permutation::from_cycles("(0 1)(2 3)", 4), Permutation::from_cycles("(0 2)(1 3)", 4)}, 4,
              label, limits);
  }
  else {
    std::vector<Point> reflection(n);
    for (unsigned i = 0; i < n; ++i)
      reflection[i] = (n - i) % n;
    g = close({cycle_on(n, 0, n), Permutation(reflection)}, n, label, limits);
  }
  check_order(g, order);
  return g;
}

FiniteGroup symmetric(unsigned m, const Limits& limits)
{
  require(m >= 1, "symmetric: m must be >= 1");
  std::vector<Permutation> gens;
  if (m >= 2) {
    gens.push_back(cycle_on(m, 0, 2));
    gens.push_back(cycle_on(m, 0, m));
  }
  auto g = close(gens, m, "sym:" + std::to_string(m), limits);
  check_order(g, factorial(m));
  return g;
}

FiniteGroup alternating(unsigned m, const Limits& limits)
{
  require(m >= 1, "alternating: m must be >= 1");
  std::vector<Permutation> gens;
  if (m >= 3) {
    gens.push_back(cycle_on(m, 0, 3));
    if (m >= 4)
      gens.push_back(m % 2 == 1 ? cycle_on(m, 0, m) : cycle_on(m, 1, m - 1));
  }
  auto g = close(gens, m, "alt:" + std::to_string(m), limits);
  check_order(g, m <= 2 ? Integer(1) : factorial(m) / 2);
  return g;
}

namespace {

/// Image of x under x -> (a x + b) / (c x + d), with point q as infinity.
Permutation moebius_map(const FiniteField& f, unsigned a, unsigned b, unsigned c, unsigned d)
{
  const unsigned q = f.size();
  std::vector<Point> images(q + 1);
  for (unsigned x = 0; x < q; ++x) {
    const unsigned num = f.add(f.mul(a, x), b);
    const unsigned den = f.add(f.mul(c, x), d);
    images[x] = den == 0 ? q : f.mul(num, f.inv(den));
  }
  images[q] = c == 0 ? q : f.mul(a, f.inv(c));
  return Permutation(std::move(images));
}

Permutation field_automorphism(const FiniteField& f)
{
  const unsigned q = f.size();
  std::vector<Point> images(q + 1);
  for (unsigned x = 0; x < q; ++x)
    images[x] = f.frobenius(x);
  images[q] = q;
  return Permutation(std::move(images));
}

std::vector<Permutation> psl2_generators(const FiniteField& f)
{
  const unsigned w = f.primitive_element();
  const unsigned w2 = f.mul(w, w);
  return {moebius_map(f, 1, 1, 0, 1),                    // x -> x + 1
          moebius_map(f, w2, 0, 0, 1),                   // x -> w^2 x
          moebius_map(f, 0, f.neg(1), 1, 0)};            // x -> -1/x
}

const char* kind_name(ProjectiveKind kind)
{
  switch (kind) {
  case ProjectiveKind::psl2: return "psl2";
  case ProjectiveKind::pgl2: return "pgl2";
  case ProjectiveKind::pgammal2: return "pgammal2";
  }
  return "?";
}

}  // namespace

FiniteGroup projective(ProjectiveKind kind, unsigned q, const Limits& limits)
{
  static const std::vector<unsigned> supported{7, 8, 9, 11, 13, 16, 17, 19};
  require(std::find(supported.begin(), supported.end(), q) != supported.end(),
          "unsupported q " + std::to_string(q) + " for projective groups");
  const FiniteField f(q);
  require(kind != ProjectiveKind::pgammal2 || f.degree() > 1,
          "unsupported q " + std::to_string(q) + ": PGammaL(2,q) needs a non-prime field");

  auto gens = psl2_generators(f);
  if (kind != ProjectiveKind::psl2)
    gens.push_back(moebius_map(f, f.primitive_element(), 0, 0, 1));
  if (kind == ProjectiveKind::pgammal2)
    gens.push_back(field_automorphism(f));

  auto g = close(gens, q + 1, std::string(kind_name(kind)) + ":" + std::to_string(q), limits);
  Integer expected = Integer(q) * (q - 1) * (q + 1);
  if (kind == ProjectiveKind::psl2 && q % 2 == 1)
    expected /= 2;
  if (kind == ProjectiveKind::pgammal2)
    expected *= f.degree();
  check_order(g, expected);
  return g;
}

FiniteGroup m10(const Limits& limits)
{
  const FiniteField f(9);
  const auto base = psl2_generators(f);
  const Permutation diagonal = moebius_map(f, f.primitive_element(), 0, 0, 1);
  const Permutation frob = field_automorphism(f);
  const std::vector<Permutation> extra{diagonal, frob, diagonal * frob};

  std::vector<FiniteGroup> overgroups;
  std::vector<std::uint64_t> max_orders;
  for (const auto& e : extra) {
    auto gens = base;
    gens.push_back(e);
    overgroups.push_back(close(gens, 10, "m10", limits));
    check_order(overgroups.back(), 720);
    const auto orders = overgroups.back().element_orders();
    max_orders.push_back(*std::max_element(orders.begin(), orders.end()));
  }
  auto sorted = max_orders;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("internal consistency: index-2 overgroups of PSL(2,9) are not separated "
                           "by their largest element orders");
  for (std::size_t i = 0; i < overgroups.size(); ++i)
    if (max_orders[i] == 8)
      return overgroups[i];
  throw std::logic_error("internal consistency: no overgroup of PSL(2,9) with largest element order 8");
}

FiniteGroup psl32(const Limits& limits)
{
  auto g = projective(ProjectiveKind::psl2, 7, limits).relabeled("psl32");
  check_order(g, 168);
  return g;
}

FiniteGroup gl2(unsigned q, const Limits& limits)
{
  require(q == 2 || q == 3, "unsupported q " + std::to_string(q) + " for gl2 (expected 2 or 3)");
  const unsigned points = q * q - 1;
  auto index_of = [q](unsigned x, unsigned y) { return x + q * y - 1; };
  std::vector<Permutation> gens;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c)
        for (unsigned d = 0; d < q; ++d) {
          if ((a * d + q * q - b * c) % q == 0)
            continue;
          std::vector<Point> images(points);
          for (unsigned x = 0; x < q; ++x)
            for (unsigned y = 0; y < q; ++y)
              if (x || y)
                images[index_of(x, y)] = index_of((a * x + b * y) % q, (c * x + d * y) % q);
          gens.emplace_back(std::move(images));
        }
  auto g = close(gens, points, "gl2:" + std::to_string(q), limits);
  check_order(g, Integer(q * q - 1) * (q * q - q));
  return g;
}

FiniteGroup wall_I(unsigned base, unsigned n, const Limits& limits)
{
  require(base == 3 || base == 4, "wall1: base must be c3 or c4");
  require(n >= 1, "wall1: n must be >= 1");
  FiniteGroup a = abelian(std::vector<unsigned>(n, base), limits);
  FiniteGroup c2 = cyclic(2, limits);
  std::vector<std::vector<Index>> action(2, std::vector<Index>(a.order()));
  for (Index x = 0; x < a.order(); ++x) {
    action[0][x] = x;
    action[1][x] = a.inv(x);
  }
  const std::string label = "wall1:c" + std::to_string(base) + "^" + std::to_string(n);
  auto g = semidirect_product(a, c2, std::move(action), label, limits);
  Integer expected = 2;
  for (unsigned i = 0; i < n; ++i)
    expected *= base;
  check_order(g, expected);
  return g;
}

FiniteGroup wall_II(const Limits& limits)
{
  FiniteGroup d8 = dihedral(8, limits);
  auto g = direct_product(d8, d8, limits).relabeled("wall2");
  check_order(g, 64);
  return g;
}

FiniteGroup wall_III(unsigned r, const Limits& limits)
{
  require(r >= 1, "wall3: r must be >= 1");
  if (r > 5)
    throw SizeLimitError("size cap exceeded: wall3 supports r <= 5");
  std::size_t big = 1;
  for (unsigned i = 0; i < r; ++i)
    big *= 8;
  const Limits wide = with_cap(limits, big);

  FiniteGroup d8 = dihedral(8, limits);
  const Subgroup z = center(d8);
  const Index zi = z.members.at(1);
  FiniteGroup power = direct_power(d8, r, wide);

  // Tuple (a_1, ..., a_r) sits at sum a_i * 8^(r - i).
  std::vector<Index> members;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (std::popcount(mask) % 2 != 0)
      continue;
    Index idx = 0;
    for (unsigned i = 0; i < r; ++i)
      idx = idx * 8 + ((mask >> i) & 1u ? zi : 0);
    members.push_back(idx);
  }
  std::sort(members.begin(), members.end());
  Subgroup n{power, members, {}, Normality::unknown};
  auto g = quotient(power, n, wide).relabeled("wall3:r=" + std::to_string(r));
  check_order(g, Integer(2) << (2 * r));
  return g;
}

FiniteGroup wall_IV(unsigned r, const Limits& limits)
{
  require(r >= 1, "wall4: r must be >= 1");
  if (r > 6)
    throw SizeLimitError("size cap exceeded: wall4 supports r <= 6");
  const Index dim = 2 * r;
  const Limits wide = with_cap(limits, std::size_t{2} << dim);

  std::vector<Index> basis;
  for (Index i = 0; i < dim; ++i)
    basis.push_back(Index{1} << i);
  FiniteGroup v = FiniteGroup::from_rule(std::size_t{1} << dim, [](Index a, Index b) { return a ^ b; },
                                         basis, "GF(2)^" + std::to_string(dim), wide);
  // Bit 2i is x_i, bit 2i+1 is y_i; c sends x_i to x_i + y_i and fixes y_i.
  Index x_bits = 0;
  for (unsigned i = 0; i < r; ++i)
    x_bits |= Index{1} << (2 * i);
  FiniteGroup c2 = cyclic(2, limits);
  std::vector<std::vector<Index>> action(2, std::vector<Index>(v.order()));
  for (Index x = 0; x < v.order(); ++x) {
    action[0][x] = x;
    action[1][x] = x ^ ((x & x_bits) << 1);
  }
  auto g = semidirect_product(v, c2, std::move(action), "wall4:r=" + std::to_string(r), wide);
  check_order(g, Integer(2) << dim);
  return g;
}

FiniteGroup frobenius_2p(unsigned p, const Limits& limits)
{
  require(p % 2 == 1 && is_prime(p), "frob: p must be an odd prime");
  require(p <= 31, "frob: p must be <= 31");
  const unsigned m = static_cast<unsigned>(multiplicative_order(2, p));
  require(m <= 12, "frob: kernel GF(2^" + std::to_string(m) + ") is too large for p = " + std::to_string(p));

  const BinaryField field(m);
  const Limits wide = with_cap(limits, std::size_t{p} << m);
  std::vector<Index> basis;
  for (unsigned i = 0; i < m; ++i)
    basis.push_back(Index{1} << i);
  FiniteGroup v = FiniteGroup::from_rule(field.size(), [](Index a, Index b) { return a ^ b; }, basis,
                                         "GF(2^" + std::to_string(m) + ")", wide);
  FiniteGroup cp = cyclic(p, limits);
  const std::uint32_t zeta = field.element_of_order(p);
  std::vector<std::vector<Index>> action(p, std::vector<Index>(v.order()));
  for (Index h = 0; h < p; ++h) {
    const std::uint32_t scale = field.pow(zeta, cyclic_exponent(cp, h));
    for (Index x = 0; x < v.order(); ++x)
      action[h][x] = field.mul(scale, x);
  }
  auto g = semidirect_product(v, cp, std::move(action), "frob:p=" + std::to_string(p), wide);
  check_order(g, Integer(p) << m);
  return g;
}

FiniteGroup fdm_s3(unsigned p, const Limits& limits)
{
  require(is_prime(p) && p >= 5, "fdm: p must be a prime >= 5");
  FiniteGroup v = plane(p, limits);
  FiniteGroup s3 = symmetric(3, limits);
  // (a, b) stands for (a, b, -a-b); pi acts by (pi.x)_j = x_{pi(j)}.
  std::vector<std::vector<Index>> action(s3.order(), std::vector<Index>(v.order()));
  for (Index h = 0; h < s3.order(); ++h) {
    const Permutation& pi = s3.permutation(h);
    for (Index x = 0; x < v.order(); ++x) {
      const unsigned a = x % p, b = x / p;
      const unsigned coords[3] = {a, b, (2 * p - a - b) % p};
      action[h][x] = coords[pi(0)] + p * coords[pi(1)];
    }
  }
  auto g = semidirect_product(v, s3, std::move(action), "fdm:p=" + std::to_string(p), limits);
  check_order(g, Integer(6) * p * p);
  return g;
}

FiniteGroup c4_module(unsigned p, const Limits& limits)
{
  require(is_prime(p) && p % 4 == 3, "c4mod: p must be a prime congruent to 3 mod 4");
  FiniteGroup v = plane(p, limits);
  FiniteGroup c4 = cyclic(4, limits);
  // (a, b) [[0, 1], [-1, 0]] = (-b, a)
  auto turn = [p](Index x) {
    const unsigned a = x % p, b = x / p;
    return static_cast<Index>((p - b) % p + p * a);
  };
  std::vector<std::vector<Index>> action(4, std::vector<Index>(v.order()));
  for (Index h = 0; h < 4; ++h) {
    const unsigned k = cyclic_exponent(c4, h);
    for (Index x = 0; x < v.order(); ++x) {
      Index y = x;
      for (unsigned i = 0; i < k; ++i)
        y = turn(y);
      action[h][x] = y;
    }
  }
  auto g = semidirect_product(v, c4, std::move(action), "c4mod:p=" + std::to_string(p), limits);
  check_order(g, Integer(4) * p * p);
  return g;
}

// ---------------------------------------------------------------------------
// Spec strings

namespace {

using Family = ConstructionSpec::Family;

class Parser {
public:
  explicit Parser(const std::string& text)
  : text_(text)
  {}

  ConstructionSpec parse_all()
  {
    auto spec = parse(0, text_.size());
    return spec;
  }

private:
  const std::string& text_;

  [[noreturn]] void fail(std::size_t pos, const std::string& why) const
  {
    throw InputError("parse error at position " + std::to_string(pos) + " in '" + text_ + "': " + why);
  }

  static bool starts_with(std::string_view s, std::string_view prefix)
  {
    return s.substr(0, prefix.size()) == prefix;
  }

  unsigned parse_number(std::size_t begin, std::size_t end) const
  {
    if (begin >= end)
      fail(begin, "expected a number");
    unsigned long value = 0;
    for (std::size_t i = begin; i < end; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text_[i])))
        fail(i, "expected a digit");
      value = value * 10 + static_cast<unsigned>(text_[i] - '0');
      if (value > 1000000)
        fail(i, "number too large");
    }
    return static_cast<unsigned>(value);
  }

  /// value or key=value, keys n, p, q, r, m
  unsigned parse_param(std::size_t begin, std::size_t end) const
  {
    const std::string_view s(text_.data() + begin, end - begin);
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      return parse_number(begin, end);
    const auto key = s.substr(0, eq);
    if (key != "n" && key != "p" && key != "q" && key != "r" && key != "m")
      fail(begin, "unknown parameter '" + std::string(key) + "'");
    return parse_number(begin + eq + 1, end);
  }

  /// "c<n>" or "c<n>^<k>"; returns false when the text is not of that shape.
  bool parse_cyclic_atom(std::size_t begin, std::size_t end, unsigned& n, unsigned& k) const
  {
    if (end - begin < 2 || text_[begin] != 'c' || !std::isdigit(static_cast<unsigned char>(text_[begin + 1])))
      return false;
    const std::string_view s(text_.data() + begin, end - begin);
    const auto caret = s.find('^');
    if (s.find(':') != std::string_view::npos)
      return false;
    if (caret == std::string_view::npos) {
      n = parse_number(begin + 1, end);
      k = 1;
    }
    else {
      n = parse_number(begin + 1, begin + caret);
      k = parse_number(begin + caret + 1, end);
    }
    return true;
  }

  std::vector<std::pair<std::size_t, std::size_t>> split_top(std::size_t begin, std::size_t end, char sep) const
  {
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    int depth = 0;
    std::size_t start = begin;
    for (std::size_t i = begin; i < end; ++i) {
      if (text_[i] == '(')
        ++depth;
      else if (text_[i] == ')')
        --depth;
      else if (text_[i] == sep && depth == 0) {
        parts.emplace_back(start, i);
        start = i + 1;
      }
    }
    parts.emplace_back(start, end);
    return parts;
  }

  ConstructionSpec parse(std::size_t begin, std::size_t end) const
  {
    while (begin < end && std::isspace(static_cast<unsigned char>(text_[begin])))
      ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text_[end - 1])))
      --end;
    if (begin >= end)
      fail(begin, "empty group specification");

    const std::string_view s(text_.data() + begin, end - begin);
    ConstructionSpec spec;
    spec.text = std::string(s);

    if (starts_with(s, "product:")) {
      spec.family = Family::product;
      for (auto [b, e] : split_top(begin + 8, end, ','))
        spec.children.push_back(parse(b, e));
      if (spec.children.size() < 2)
        fail(begin + 8, "product needs at least two factors");
      return spec;
    }
    if (starts_with(s, "power:")) {
      spec.family = Family::power;
      const auto caret = s.rfind('^');
      if (caret == std::string_view::npos || caret < 6)
        fail(begin + 6, "power needs 'base^n'");
      spec.children.push_back(parse(begin + 6, begin + caret));
      spec.params.push_back(parse_number(begin + caret + 1, end));
      return spec;
    }
    if (starts_with(s, "quotient:")) {
      spec.family = Family::quotient;
      const auto slash = s.rfind('/');
      if (slash == std::string_view::npos || slash < 9)
        fail(begin + 9, "quotient needs 'base/selector'");
      spec.children.push_back(parse(begin + 9, begin + slash));
      spec.argument = std::string(s.substr(slash + 1));
      if (spec.argument == "center" || spec.argument == "derived")
        return spec;
      if (starts_with(spec.argument, "order=")) {
        spec.params.push_back(parse_number(begin + slash + 7, end));
        return spec;
      }
      fail(begin + slash + 1, "quotient selector must be center, derived or order=<n>");
    }
    if (starts_with(s, "derived:")) {
      spec.family = Family::derived;
      spec.children.push_back(parse(begin + 8, end));
      return spec;
    }
    if (starts_with(s, "perm:")) {
      spec.family = Family::permutations;
      const auto colon = s.find(':', 5);
      if (colon == std::string_view::npos)
        fail(begin + 5, "perm needs 'degree:cycles;cycles;...'");
      spec.params.push_back(parse_number(begin + 5, begin + colon));
      spec.argument = std::string(s.substr(colon + 1));
      return spec;
    }

    unsigned n = 0, k = 0;
    if (parse_cyclic_atom(begin, end, n, k)) {
      if (n == 0)
        fail(begin + 1, "cyclic order must be >= 1");
      spec.family = k == 1 ? Family::cyclic : Family::cyclic_power;
      spec.params = k == 1 ? std::vector<unsigned>{n} : std::vector<unsigned>{n, k};
      return spec;
    }

    const auto colon = s.find(':');
    const std::string name(s.substr(0, colon));
    const std::size_t args_begin = colon == std::string_view::npos ? end : begin + colon + 1;

    static const std::map<std::string, std::pair<Family, int>> families{
      {"trivial", {Family::trivial, 0}},     {"c", {Family::cyclic, 1}},
      {"cyclic", {Family::cyclic, 1}},       {"dihedral", {Family::dihedral, 1}},
      {"sym", {Family::symmetric, 1}},       {"alt", {Family::alternating, 1}},
      {"psl2", {Family::psl2, 1}},           {"pgl2", {Family::pgl2, 1}},
      {"pgammal2", {Family::pgammal2, 1}},   {"m10", {Family::m10, 0}},
      {"psl32", {Family::psl32, 0}},         {"gl2", {Family::gl2, 1}},
      {"wall2", {Family::wall_II, 0}},       {"wall3", {Family::wall_III, 1}},
      {"wall4", {Family::wall_IV, 1}},       {"frob", {Family::frobenius_2p, 1}},
      {"fdm", {Family::fdm_s3, 1}},          {"c4mod", {Family::c4_module, 1}},
    };

    if (name == "elab") {
      spec.family = Family::elementary_abelian;
      const std::string_view arg(text_.data() + args_begin, end - args_begin);
      const auto caret = arg.find('^');
      if (caret == std::string_view::npos)
        fail(args_begin, "elab needs 'p^k'");
      spec.params = {parse_number(args_begin, args_begin + caret), parse_number(args_begin + caret + 1, end)};
      return spec;
    }
    if (name == "abelian") {
      spec.family = Family::abelian;
      for (auto [b, e] : split_top(args_begin, end, 'x'))
        spec.params.push_back(parse_number(b, e));
      return spec;
    }
    if (name == "wall1") {
      unsigned base = 0, power = 0;
      if (!parse_cyclic_atom(args_begin, end, base, power) || (base != 3 && base != 4))
        fail(args_begin, "wall1 needs c3^n or c4^n");
      spec.family = base == 3 ? Family::wall_I_3 : Family::wall_I_4;
      spec.params = {power};
      return spec;
    }

    const auto it = families.find(name);
    if (it == families.end())
      fail(begin, "unknown family '" + name + "'");
    spec.family = it->second.first;
    if (args_begin < end)
      for (auto [b, e] : split_top(args_begin, end, ':'))
        spec.params.push_back(parse_param(b, e));
    if (spec.params.size() != static_cast<std::size_t>(it->second.second))
      fail(args_begin, "family '" + name + "' takes " + std::to_string(it->second.second) + " parameter(s)");
    return spec;
  }
};

Subgroup select_normal(const FiniteGroup& g, const ConstructionSpec& spec, const Limits& limits)
{
  if (spec.argument == "center")
    return center(g);
  if (spec.argument == "derived") {
    const auto series = derived_series(g);
    return series.size() > 1 ? series[1] : series[0];
  }
  const unsigned wanted = spec.params.at(0);
  std::vector<Subgroup> matches;
  for (auto& n : normal_subgroups(g, limits))
    if (n.order() == wanted)
      matches.push_back(std::move(n));
  if (matches.size() != 1)
    throw InputError("quotient selector order=" + std::to_string(wanted) + " matches " +
                     std::to_string(matches.size()) + " normal subgroups of '" + g.label() + "'");
  return matches.front();
}

}  // namespace

ConstructionSpec parse_spec(const std::string& text)
{
  return Parser(text).parse_all();
}

FiniteGroup build(const ConstructionSpec& spec, const Limits& limits)
{
  const auto& p = spec.params;
  FiniteGroup g;
  switch (spec.family) {
  case Family::trivial: g = FiniteGroup(); break;
  case Family::cyclic: g = cyclic(p.at(0), limits); break;
  case Family::cyclic_power: g = abelian(std::vector<unsigned>(p.at(1), p.at(0)), limits); break;
  case Family::elementary_abelian: g = elementary_abelian(p.at(0), p.at(1), limits); break;
  case Family::abelian: g = abelian(p, limits); break;
  case Family::dihedral: g = dihedral(p.at(0), limits); break;
  case Family::symmetric: g = symmetric(p.at(0), limits); break;
  case Family::alternating: g = alternating(p.at(0), limits); break;
  case Family::psl2: g = projective(ProjectiveKind::psl2, p.at(0), limits); break;
  case Family::pgl2: g = projective(ProjectiveKind::pgl2, p.at(0), limits); break;
  case Family::pgammal2: g = projective(ProjectiveKind::pgammal2, p.at(0), limits); break;
  case Family::m10: g = m10(limits); break;
  case Family::psl32: g = psl32(limits); break;
  case Family::gl2: g = gl2(p.at(0), limits); break;
  case Family::wall_I_3: g = wall_I(3, p.at(0), limits); break;
  case Family::wall_I_4: g = wall_I(4, p.at(0), limits); break;
  case Family::wall_II: g = wall_II(limits); break;
  case Family::wall_III: g = wall_III(p.at(0), limits); break;
  case Family::wall_IV: g = wall_IV(p.at(0), limits); break;
  case Family::frobenius_2p: g = frobenius_2p(p.at(0), limits); break;
  case Family::fdm_s3: g = fdm_s3(p.at(0), limits); break;
  case Family::c4_module: g = c4_module(p.at(0), limits); break;
  case Family::product: {
    g = build(spec.children.at(0), limits);
    for (std::size_t i = 1; i < spec.children.size(); ++i)
      g = direct_product(g, build(spec.children[i], limits), limits);
    break;
  }
  case Family::power: g = direct_power(build(spec.children.at(0), limits), p.at(0), limits); break;
  case Family::quotient: {
    FiniteGroup base = build(spec.children.at(0), limits);
    g = quotient(base, select_normal(base, spec, limits), limits);
    break;
  }
  case Family::derived: {
    FiniteGroup base = build(spec.children.at(0), limits);
    const auto series = derived_series(base);
    g = series.size() > 1 ? subgroup_as_group(series[1], limits) : base;
    break;
  }
  case Family::permutations: {
    const unsigned degree = p.at(0);
    std::vector<Permutation> gens;
    std::stringstream in(spec.argument);
    std::string item;
    try {
      while (std::getline(in, item, ';'))
        gens.push_back(Permutation::from_cycles(item, degree));
    }
    catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    g = FiniteGroup::close_generators(gens, degree, spec.text, limits);
    break;
  }
  }
  return g.relabeled(spec.text);
}

FiniteGroup construct(const std::string& text, const Limits& limits)
{
  return build(parse_spec(text), limits);
}

std::optional<Rational> expected_alpha(const ConstructionSpec& spec)
{
  const auto& p = spec.params;
  auto wall_formula = [](unsigned base, unsigned n) {
    Integer t = 1;
    for (unsigned i = 0; i < n; ++i)
      t *= base;
    return make_rational(3 * t + 1, 4 * t);
  };
  switch (spec.family) {
  case Family::wall_I_3: return wall_formula(3, p.at(0));
  case Family::wall_I_4: return wall_formula(2, p.at(0));
  case Family::wall_II: return make_rational(25, 32);
  case Family::wall_III:
  case Family::wall_IV: return wall_formula(2, p.at(0));
  case Family::frobenius_2p: return make_rational(2, p.at(0));
  case Family::cyclic:
    if (is_prime(p.at(0)))
      return make_rational(2, p.at(0));
    return std::nullopt;
  default: return std::nullopt;
  }
}

std::optional<Integer> expected_order(const ConstructionSpec& spec)
{
  const auto& p = spec.params;
  auto power = [](Integer base, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i)
      r *= base;
    return r;
  };
  switch (spec.family) {
  case Family::trivial: return Integer(1);
  case Family::cyclic: return Integer(p.at(0));
  case Family::cyclic_power:
  case Family::elementary_abelian: return power(p.at(0), p.at(1));
  case Family::abelian: {
    Integer r = 1;
    for (unsigned f : p)
      r *= f;
    return r;
  }
  case Family::dihedral: return Integer(p.at(0));
  case Family::symmetric: return factorial(p.at(0));
  case Family::alternating: return p.at(0) <= 2 ? Integer(1) : factorial(p.at(0)) / 2;
  case Family::psl2:
  case Family::pgl2:
  case Family::pgammal2: {
    const unsigned q = p.at(0);
    Integer r = Integer(q) * (q - 1) * (q + 1);
    if (spec.family == Family::psl2 && q % 2 == 1)
      r /= 2;
    if (spec.family == Family::pgammal2)
      r *= factorize(q).front().second;
    return r;
  }
  case Family::m10: return Integer(720);
  case Family::psl32: return Integer(168);
  case Family::gl2: return Integer(p.at(0) * p.at(0) - 1) * (p.at(0) * p.at(0) - p.at(0));
  case Family::wall_I_3: return 2 * power(3, p.at(0));
  case Family::wall_I_4: return 2 * power(4, p.at(0));
  case Family::wall_II: return Integer(64);
  case Family::wall_III: return 2 * power(4, p.at(0));
  case Family::wall_IV: return power(2, 2 * p.at(0) + 1);
  case Family::frobenius_2p: return Integer(p.at(0)) * power(2, multiplicative_order(2, p.at(0)));
  case Family::fdm_s3: return Integer(6) * p.at(0) * p.at(0);
  case Family::c4_module: return Integer(4) * p.at(0) * p.at(0);
  case Family::product: {
    Integer r = 1;
    for (const auto& c : spec.children) {
      auto o = expected_order(c);
      if (!o)
        return std::nullopt;
      r *= *o;
    }
    return r;
  }
  case Family::power: {
    auto o = expected_order(spec.children.at(0));
    if (!o)
      return std::nullopt;
    return power(*o, p.at(0));
  }
  default: return std::nullopt;
  }
}

}  // namespace cycgroup
