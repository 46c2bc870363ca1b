#include <doctest.h>

#include "cycgroup/analysis.hpp"
#include "cycgroup/constructions.hpp"
#include "cycgroup/invariants.hpp"
#include "cycgroup/structure.hpp"

using namespace cycgroup;

namespace {

Integer power_of(u64 base, unsigned k)
{
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i)
    r *= base;
  return r;
}

}  // namespace

TEST_CASE("standard families")
{
  const auto c12 = cyclic(12);
  const auto s = order_spectrum(c12);
  for (u64 d : divisors(12))
    CHECK(s.count(d) == euler_phi(d));
  CHECK(elementary_abelian(3, 3).order() == 27);
  CHECK(abelian({2, 4, 3}).order() == 24);
  CHECK(dihedral(2).order() == 2);
  CHECK(dihedral(4).order() == 4);
  CHECK(is_abelian(dihedral(4)));
  CHECK(involution_count(order_spectrum(dihedral(8))) == 6);
  CHECK(symmetric(5).order() == 120);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(alternating(2).order() == 1);
  CHECK_THROWS_AS(dihedral(7), InputError);
  CHECK_THROWS_AS(elementary_abelian(4, 2), InputError);
  CHECK_THROWS_AS(cyclic(0), InputError);
}

TEST_CASE("projective groups")
{
  CHECK(projective(ProjectiveKind::psl2, 11).order() == 660);
  CHECK(projective(ProjectiveKind::pgammal2, 9).order() == 1440);
  CHECK(projective(ProjectiveKind::psl2, 16).order() == 4080);
  CHECK(projective(ProjectiveKind::pgl2, 8).order() == 504);
  CHECK(projective(ProjectiveKind::psl2, 8).order() == 504);
  CHECK_THROWS_AS(projective(ProjectiveKind::psl2, 10), InputError);
  CHECK_THROWS_AS(projective(ProjectiveKind::psl2, 23), InputError);
  CHECK_THROWS_AS(projective(ProjectiveKind::pgammal2, 7), InputError);
  CHECK(is_isomorphic(construct("quotient:sym:4/order=4"), symmetric(3)));
}

TEST_CASE("M10 and PSL(3,2)")
{
  const auto m = m10();
  CHECK(m.order() == 720);
  CHECK(psl32().order() == 168);
  CHECK(psl32().label() == "psl32");
  const auto sm = order_spectrum(m);
  const auto s6 = order_spectrum(symmetric(6));
  const auto pgl = order_spectrum(projective(ProjectiveKind::pgl2, 9));
  CHECK(sm.count(8) > 0);
  CHECK(s6.count(8) == 0);
  CHECK(sm != s6);
  CHECK(sm != pgl);
  CHECK(s6.exponent() == 60);
  CHECK(*std::max_element(m.element_orders().begin(), m.element_orders().end()) == 8);
}

TEST_CASE("GL(2,q)")
{
  CHECK(gl2(3).order() == 48);
  CHECK(order_spectrum(gl2(3)).count(8) > 0);
  CHECK(is_isomorphic(gl2(2), symmetric(3)));
  CHECK_THROWS_AS(gl2(5), InputError);
}

TEST_CASE("wall families")
{
  CHECK(alpha(order_spectrum(wall_I(3, 1))) == make_rational(5, 6));
  CHECK(alpha(order_spectrum(wall_I(4, 1))) == make_rational(7, 8));
  CHECK(alpha(order_spectrum(wall_I(3, 2))) == make_rational(7, 9));
  CHECK(wall_I(3, 2).order() == 18);
  CHECK(wall_I(4, 3).order() == 128);
  CHECK_THROWS_AS(wall_I(5, 1), InputError);

  CHECK(wall_II().order() == 64);
  CHECK(alpha(order_spectrum(wall_II())) == make_rational(25, 32));

  for (unsigned r = 1; r <= 4; ++r) {
    const auto s = order_spectrum(wall_III(r));
    const Integer t = power_of(2, r);
    CHECK(s.group_order == 2 * t * t);
    CHECK(involution_count(s) == t * t + t);
    CHECK(s.count(4) == t * t - t);
  }
  CHECK(alpha(order_spectrum(wall_III(1))) == make_rational(7, 8));
  CHECK(alpha(order_spectrum(wall_III(2))) == make_rational(13, 16));
  CHECK_THROWS_AS(wall_III(6), SizeLimitError);

  for (unsigned r = 1; r <= 4; ++r) {
    const auto g = wall_IV(r);
    CHECK(g.order() == (std::size_t{2} << (2 * r)));
    CHECK(center(g).order() == (std::size_t{1} << r));
  }
  CHECK(wall_IV(6).order() == 8192);
  CHECK(order_spectrum(wall_IV(2)).count(4) == 12);
  CHECK(alpha(order_spectrum(wall_IV(2))) == make_rational(13, 16));
  CHECK(is_isomorphic(wall_IV(1), dihedral(8)));
  CHECK_THROWS_AS(wall_IV(7), SizeLimitError);
}

TEST_CASE("Frobenius groups 2^m : p")
{
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    const auto s = order_spectrum(frobenius_2p(p));
    const unsigned m = static_cast<unsigned>(multiplicative_order(2, p));
    const Integer two_m = power_of(2, m);
    CHECK(s.group_order == two_m * p);
    CHECK(s.counts.size() == 3);
    CHECK(s.count(2) == two_m - 1);
    CHECK(s.count(p) == two_m * (p - 1));
    CHECK(alpha(s) == make_rational(2, p));
  }
  CHECK(frobenius_2p(7).order() == 56);
  CHECK(is_isomorphic(frobenius_2p(3), alternating(4)));
  CHECK_THROWS_AS(frobenius_2p(2), InputError);
  CHECK_THROWS_AS(frobenius_2p(9), InputError);
  CHECK_THROWS_AS(frobenius_2p(37), InputError);
  CHECK_THROWS_AS(frobenius_2p(29), InputError);
}

TEST_CASE("fully deleted module and C4-module groups")
{
  for (u64 p : {5u, 7u, 11u}) {
    const auto s = order_spectrum(fdm_s3(static_cast<unsigned>(p)));
    CHECK(s.group_order == 6 * p * p);
    CHECK(s.count(2) == 3 * p);
    CHECK(s.count(3) == 2 * p * p);
    CHECK(s.count(p) == p * p - 1);
    CHECK(s.count(2 * p) == 3 * p * p - 3 * p);
    CHECK(s.count(6) == 0);
    CHECK(c_direct(s) == p * p + 7 * p + 2);
  }
  for (u64 p : {3u, 7u, 11u}) {
    const auto s = order_spectrum(c4_module(static_cast<unsigned>(p)));
    CHECK(s.group_order == 4 * p * p);
    CHECK(s.count(p) == p * p - 1);
    CHECK(s.count(2) == p * p);
    CHECK(s.count(4) == 2 * p * p);
    CHECK(c_direct(s) == 2 * p * p + p + 2);
  }
  CHECK(c_direct(order_spectrum(c4_module(3))) == 23);
  CHECK(c_direct(order_spectrum(fdm_s3(5))) == 62);
  CHECK_THROWS_AS(fdm_s3(3), InputError);
  CHECK_THROWS_AS(c4_module(5), InputError);
}

TEST_CASE("spec strings")
{
  CHECK(parse_spec("pgl2:9").family == ConstructionSpec::Family::pgl2);
  CHECK(parse_spec("wall3:r=2").params == std::vector<unsigned>{2});
  CHECK(parse_spec("fdm:p=5").params == std::vector<unsigned>{5});
  const auto prod = parse_spec("product:c2^3,sym:4");
  CHECK(prod.family == ConstructionSpec::Family::product);
  REQUIRE(prod.children.size() == 2);
  CHECK(prod.children[0].family == ConstructionSpec::Family::cyclic_power);
  CHECK(construct("product:c2^3,sym:4").order() == 192);
  CHECK(construct("product:c:4,sym:3").order() == 24);
  CHECK(construct("power:sym:3^2").order() == 36);
  CHECK(construct("quotient:gl2:3/center").order() == 24);
  CHECK(construct("quotient:sym:4/derived").order() == 2);
  CHECK(construct("derived:sym:4").order() == 12);
  CHECK(construct("elab:2^3").order() == 8);
  CHECK(construct("abelian:2x4").order() == 8);
  CHECK(construct("trivial").order() == 1);
  CHECK(construct("perm:4:(0 1);(2 3)").order() == 4);
  CHECK(construct("sym:4").label() == "sym:4");
  CHECK(construct("  sym:4 ").label() == "sym:4");

  CHECK_THROWS_WITH_AS(parse_spec("bogus:3"), doctest::Contains("position 0"), InputError);
  CHECK_THROWS_WITH_AS(parse_spec("sym:x"), doctest::Contains("position 4"), InputError);
  CHECK_THROWS_WITH_AS(parse_spec("product:sym:3,"), doctest::Contains("position 14"), InputError);
  CHECK_THROWS_AS(parse_spec(""), InputError);
  CHECK_THROWS_AS(parse_spec("quotient:sym:4/bad"), InputError);
  CHECK_THROWS_AS(parse_spec("wall1:c5^2"), InputError);
  CHECK_THROWS_AS(parse_spec("sym:3:4"), InputError);
  CHECK_THROWS_AS(construct("quotient:c2^2/order=2"), InputError);
  CHECK_THROWS_AS(construct("perm:3:(0 5)"), InputError);
}

TEST_CASE("closed forms agree with the built groups")
{
  for (const auto& spec : default_corpus_specs()) {
    const auto parsed = parse_spec(spec);
    const auto g = build(parsed);
    const auto order = expected_order(parsed);
    if (order)
      CHECK_MESSAGE(*order == g.order(), spec);
    const auto a = expected_alpha(parsed);
    if (a)
      CHECK_MESSAGE(*a == alpha(order_spectrum(g)), spec);
  }
  CHECK(expected_alpha(parse_spec("wall1:c3^3")) == make_rational(82, 108));
  CHECK(expected_order(parse_spec("pgammal2:16")) == Integer(16320));
}
