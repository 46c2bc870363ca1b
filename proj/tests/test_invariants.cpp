#include <doctest.h>

#include <json.hpp>

#include "cycgroup/constructions.hpp"
#include "cycgroup/invariants.hpp"
#include "cycgroup/structure.hpp"

using namespace cycgroup;

namespace {

/// c(G) by brute force: one term per element.
Rational brute_c(const FiniteGroup& g)
{
  Rational total = 0;
  for (Index x = 0; x < g.order(); ++x)
    total += make_rational(1, euler_phi(g.element_order(x)));
  return total;
}

/// Number of x with x^d = 1, by powering each element.
Integer brute_B(const FiniteGroup& g, u64 d)
{
  Integer n = 0;
  for (Index x = 0; x < g.order(); ++x) {
    Index y = 0;
    for (u64 i = 0; i < d; ++i)
      y = g.mul(y, x);
    n += y == 0;
  }
  return n;
}

}  // namespace

TEST_CASE("order spectra")
{
  const auto s3 = order_spectrum(symmetric(3));
  CHECK(s3.counts == std::map<u64, Integer>{{1, 1}, {2, 3}, {3, 2}});
  CHECK(s3.exponent() == 6);
  const auto d8 = order_spectrum(dihedral(8));
  CHECK(d8.counts == std::map<u64, Integer>{{1, 1}, {2, 5}, {4, 2}});
  for (unsigned n = 1; n <= 5; ++n) {
    const auto s = order_spectrum(elementary_abelian(2, n));
    CHECK(s.count(2) == (Integer(1) << n) - 1);
  }
  CHECK(order_spectrum(cyclic(12)) == cyclic_spectrum(12));
  CHECK(cyclic_spectrum(1).counts.size() == 1);

  OrderSpectrum broken;
  broken.group_order = 4;
  broken.counts = {{1, 1}, {2, 2}};
  CHECK_THROWS_AS(broken.validate(), std::domain_error);
  broken.counts = {{1, 1}, {3, 3}};
  CHECK_THROWS_AS(broken.validate(), std::domain_error);
}

TEST_CASE("B counts solutions of x^d = 1")
{
  const auto s3 = order_spectrum(symmetric(3));
  CHECK(B(s3, 1) == 1);
  CHECK(B(s3, 2) == 4);
  CHECK(B(s3, 3) == 3);
  CHECK(B(s3, 6) == 6);
  for (const std::string spec : {"sym:4", "gl2:3", "wall3:r=2", "fdm:p=5", "c4mod:p=3", "alt:5"}) {
    const auto g = construct(spec);
    const auto s = order_spectrum(g);
    for (u64 d : divisors(s.exponent())) {
      REQUIRE(B(s, d) == brute_B(g, d));
      REQUIRE(B(s, d) % d == 0);
    }
  }
}

TEST_CASE("c(G) by three routes")
{
  CHECK(c_direct(order_spectrum(symmetric(3))) == 5);
  CHECK(c_direct(order_spectrum(symmetric(4))) == 17);
  CHECK(c_direct(order_spectrum(symmetric(5))) == 67);
  CHECK(c_direct(order_spectrum(dihedral(8))) == 7);
  for (u64 n = 1; n <= 30; ++n)
    CHECK(c_direct(cyclic_spectrum(n)) == divisors(n).size());

  for (const std::string spec : {"sym:4", "dihedral:12", "gl2:3", "alt:5", "wall1:c4^2", "wall4:r=2", "frob:p=7",
                                 "product:c4,sym:3", "psl2:7"}) {
    const auto g = construct(spec);
    const auto s = order_spectrum(g);
    const Integer c = c_direct(s);
    CHECK_MESSAGE(Rational(c) == brute_c(g), spec);
    CHECK_MESSAGE(c_moebius(s) == c, spec);
    if (is_nilpotent(g))
      CHECK_MESSAGE(c_nilpotent(s) == c, spec);
  }

  OrderSpectrum odd;
  odd.group_order = 3;
  odd.counts = {{1, 1}, {2, 1}, {3, 1}};
  CHECK_THROWS_WITH(c_direct(odd), doctest::Contains("non-integral c"));
}

TEST_CASE("r from B")
{
  const auto s = order_spectrum(symmetric(4));
  for (u64 l : divisors(12)) {
    std::vector<Integer> b;
    for (u64 d : divisors(l))
      b.push_back(B(s, d));
    CHECK(r_from_B(l, b) == s.count(l));
  }
  CHECK(r_from_B(1, {1}) == 1);
  CHECK(r_from_B(6, {1, 4, 3, 6}) == 0);
  CHECK(r_from_B(4, {1, 2, 4}) == 2);
}

TEST_CASE("involutions and alpha")
{
  CHECK(involution_count(order_spectrum(symmetric(3))) == 4);
  CHECK(involution_count(order_spectrum(cyclic(5))) == 1);
  CHECK(alpha(order_spectrum(symmetric(3))) == make_rational(5, 6));
  CHECK(alpha(order_spectrum(elementary_abelian(2, 3))) == 1);
  for (u64 p : {3u, 5u, 7u, 11u, 13u})
    CHECK(alpha(cyclic_spectrum(p)) == make_rational(2, p));
}

TEST_CASE("commuting probability")
{
  CHECK(commuting_probability(symmetric(3)) == make_rational(1, 2));
  CHECK(commuting_probability(dihedral(8)) == make_rational(5, 8));
  CHECK(commuting_probability(cyclic(9)) == 1);
  for (const std::string spec : {"sym:4", "gl2:3", "alt:5", "wall3:r=2", "frob:p=5", "dihedral:18"}) {
    const auto g = construct(spec);
    CHECK_MESSAGE(commuting_probability(g) == commuting_probability_pairs(g), spec);
  }
  CHECK_THROWS_AS(commuting_probability_pairs(symmetric(6)), SizeLimitError);
}

TEST_CASE("fingerprints")
{
  const auto f = fingerprint(symmetric(5));
  CHECK(f.label == "sym:5");
  CHECK(f.order == 120);
  CHECK(f.c == 67);
  CHECK(f.alpha == make_rational(67, 120));
  CHECK(f.involutions == 26);
  CHECK(f.classes == 7);
  CHECK(f.cp == make_rational(7, 120));
  CHECK(f.exponent == 60);
  CHECK_FALSE(f.abelian);
  CHECK_FALSE(f.solvable);
  REQUIRE(f.supersolvable.has_value());
  CHECK_FALSE(*f.supersolvable);

  const auto a5sq = fingerprint(construct("product:alt:5,alt:5"));
  CHECK(a5sq.order == 3600);
  CHECK(a5sq.classes == 25);
  CHECK_FALSE(a5sq.supersolvable.has_value());

  const auto c7 = fingerprint(cyclic(7));
  CHECK(c7.c == 2);
  CHECK(c7.abelian);
  CHECK(c7.nilpotent);
  CHECK(c7.supersolvable == std::optional<bool>(true));
  CHECK(fingerprint(cyclic(7)) == c7);
}

TEST_CASE("fingerprint serialization")
{
  const auto f = fingerprint(construct("sym:3"));
  const auto j = nlohmann::ordered_json::parse(fingerprint_json(f));
  std::vector<std::string> keys;
  for (const auto& item : j.items())
    keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"label", "order", "c", "alpha", "involutions", "classes", "cp", "exponent",
                                         "abelian", "nilpotent", "solvable", "supersolvable"});
  CHECK(j["alpha"] == "5/6");
  CHECK(j["c"] == 5);
  CHECK(j["cp"] == "1/2");
  CHECK(j["supersolvable"] == true);

  auto big = fingerprint(construct("product:alt:5,alt:5"));
  CHECK(nlohmann::json::parse(fingerprint_json(big))["supersolvable"].is_null());

  CHECK(fingerprint_csv_header() ==
        "label,order,c,alpha,involutions,classes,cp,exponent,abelian,nilpotent,solvable,supersolvable");
  CHECK(fingerprint_csv(f) == "sym:3,6,5,5/6,4,3,1/2,6,false,false,true,true");
  const auto p = fingerprint(construct("product:c2,sym:3"));
  CHECK(fingerprint_csv(p).rfind("\"product:c2,sym:3\",12,", 0) == 0);
  CHECK(fingerprint_pretty(f).find("5/6") != std::string::npos);
}
