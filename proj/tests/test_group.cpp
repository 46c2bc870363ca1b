#include <doctest.h>

#include "cycgroup/arith.hpp"
#include "cycgroup/constructions.hpp"
#include "cycgroup/structure.hpp"

using namespace cycgroup;

namespace {

std::vector<Index> cyclic_table(std::size_t n)
{
  std::vector<Index> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = static_cast<Index>((i + j) % n);
  return t;
}

}  // namespace

TEST_CASE("closure of generators")
{
  const std::vector<Permutation> s3{Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1 2)", 3)};
  const auto g = FiniteGroup::close_generators(s3, 3, "S3");
  CHECK(g.order() == 6);
  CHECK(g.permutation(0).is_identity());
  CHECK(FiniteGroup::close_generators({}, 3, "1").order() == 1);

  const std::vector<Permutation> mixed{Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1)", 4)};
  CHECK_THROWS_WITH_AS(FiniteGroup::close_generators(mixed, 3, "x"), doctest::Contains("degree mismatch"),
                       InputError);

  Limits tight;
  tight.size_cap = 100;
  CHECK_THROWS_WITH_AS(symmetric(5, tight), doctest::Contains("size cap exceeded"), SizeLimitError);
}

TEST_CASE("closure is deterministic")
{
  const auto a = projective(ProjectiveKind::pgl2, 9);
  const auto b = projective(ProjectiveKind::pgl2, 9);
  REQUIRE(a.order() == 720);
  for (Index i = 0; i < a.order(); ++i)
    REQUIRE(a.permutation(i) == b.permutation(i));
}

TEST_CASE("element orders")
{
  const auto s7 = symmetric(7);
  const auto idx = s7.index_of(Permutation::from_cycles("(0 1 2 3)(4 5)", 7));
  REQUIRE(idx.has_value());
  CHECK(s7.element_order(*idx) == 4);
  CHECK(s7.element_order(0) == 1);
  const auto s5 = symmetric(5);
  CHECK(s5.element_order(*s5.index_of(Permutation::from_cycles("(2 4)", 5))) == 2);
}

TEST_CASE("group laws hold in constructed groups")
{
  for (const std::string spec : {"sym:4", "dihedral:10", "wall1:c3^2", "c4mod:p=3", "quotient:sym:4/order=4"}) {
    const auto g = construct(spec);
    for (Index a = 0; a < g.order(); ++a) {
      REQUIRE(g.mul(a, g.inv(a)) == 0);
      REQUIRE(g.mul(0, a) == a);
      for (Index b = 0; b < g.order(); ++b)
        for (Index c = 0; c < g.order(); c += 3)
          REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("Cayley table ingestion validates the axioms")
{
  const auto c6 = FiniteGroup::from_table(cyclic_table(6), 6, "C6");
  CHECK(c6.order() == 6);
  CHECK(is_cyclic(c6));

  auto bad_row = cyclic_table(4);
  bad_row[1 * 4 + 2] = bad_row[1 * 4 + 3];
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(bad_row, 4, "x"), doctest::Contains("not a Latin square row"),
                       InputError);

  auto bad_identity = cyclic_table(3);
  std::swap(bad_identity[0], bad_identity[1]);
  std::swap(bad_identity[3], bad_identity[4]);
  std::swap(bad_identity[6], bad_identity[7]);
  CHECK_THROWS_AS(FiniteGroup::from_table(bad_identity, 3, "x"), InputError);

  auto out_of_range = cyclic_table(3);
  out_of_range[4] = 7;
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(out_of_range, 3, "x"), doctest::Contains("out of range"),
                       InputError);

  // A Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<Index> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(loop, 5, "x"), doctest::Contains("associativity"), InputError);
}

TEST_CASE("direct products: orders multiply and element orders are lcms")
{
  const auto c2 = cyclic(2);
  const auto s3 = symmetric(3);
  CHECK(direct_product(c2, s3).order() == 12);
  for (const auto& [a_spec, b_spec] : std::vector<std::pair<std::string, std::string>>{
         {"sym:3", "c4"}, {"dihedral:8", "c3"}, {"alt:4", "dihedral:10"}, {"c6", "c4"}}) {
    const auto a = construct(a_spec);
    const auto b = construct(b_spec);
    const auto p = direct_product(a, b);
    REQUIRE(p.order() == a.order() * b.order());
    for (Index x = 0; x < a.order(); ++x)
      for (Index y = 0; y < b.order(); ++y)
        REQUIRE(p.element_order(static_cast<Index>(x * b.order() + y)) ==
                lcm(a.element_order(x), b.element_order(y)));
  }
  const auto trivial_left = direct_product(FiniteGroup(), s3);
  CHECK(is_isomorphic(trivial_left, s3));
  CHECK(direct_product(alternating(5), alternating(5)).order() == 3600);
}

TEST_CASE("quotients")
{
  const auto s4 = symmetric(4);
  Subgroup v4;
  for (const auto& n : normal_subgroups(s4))
    if (n.order() == 4)
      v4 = n;
  REQUIRE(v4.order() == 4);
  const auto q = quotient(s4, v4);
  CHECK(q.order() == 6);
  CHECK(is_isomorphic(q, symmetric(3)));

  // o(gN) divides o(g)
  for (const std::string spec : {"sym:4", "dihedral:16", "gl2:3", "wall3:r=2"}) {
    const auto g = construct(spec);
    for (const auto& n : normal_subgroups(g)) {
      const auto gn = quotient(g, n);
      REQUIRE(gn.order() * n.order() == g.order());
      const auto mask = n.mask();
      for (Index x = 0; x < g.order(); ++x) {
        u64 m = 1;
        for (Index y = x; !mask[y]; y = g.mul(y, x))
          ++m;
        REQUIRE(g.element_order(x) % m == 0);
      }
    }
  }

  CHECK(is_isomorphic(quotient(s4, trivial_subgroup(s4)), s4));
  CHECK(quotient(s4, whole_group(s4)).order() == 1);

  const Index t = *s4.index_of(Permutation::from_cycles("(0 1)", 4));
  const std::vector<Index> gens{t};
  CHECK_THROWS_WITH_AS(quotient(s4, generate(s4, gens)), doctest::Contains("not normal"), InputError);
}

TEST_CASE("semidirect products")
{
  const auto c3 = cyclic(3);
  const auto c2 = cyclic(2);
  std::vector<std::vector<Index>> inversion(2, std::vector<Index>(3));
  for (Index x = 0; x < 3; ++x) {
    inversion[0][x] = x;
    inversion[1][x] = c3.inv(x);
  }
  const auto s = semidirect_product(c3, c2, inversion, "C3 x| C2");
  CHECK(s.order() == 6);
  CHECK(is_isomorphic(s, symmetric(3)));

  const auto d8 = dihedral(8);
  std::vector<std::vector<Index>> none(1, std::vector<Index>(8));
  for (Index x = 0; x < 8; ++x)
    none[0][x] = x;
  CHECK(is_isomorphic(semidirect_product(d8, FiniteGroup(), none, "D8 x| 1"), d8));

  auto not_bijective = inversion;
  not_bijective[1] = {0, 1, 1};
  CHECK_THROWS_WITH_AS(semidirect_product(c3, c2, not_bijective, "x"), doctest::Contains("not an automorphism"),
                       InputError);

  // x -> x + 1 is a bijection but not multiplicative
  auto shift = inversion;
  shift[1] = {1, 2, 0};
  CHECK_THROWS_WITH_AS(semidirect_product(c3, c2, shift, "x"), doctest::Contains("not an automorphism"), InputError);

  // the identity of C2 acting by inversion breaks the homomorphism property
  auto swapped = inversion;
  std::swap(swapped[0], swapped[1]);
  CHECK_THROWS_WITH_AS(semidirect_product(c3, c2, swapped, "x"), doctest::Contains("not a homomorphism"),
                       InputError);

  // an automorphism of order 2 cannot be the image of a generator of C3
  std::vector<std::vector<Index>> bad_hom(3, std::vector<Index>(3));
  const auto c3b = cyclic(3);
  for (Index h = 0; h < 3; ++h)
    for (Index x = 0; x < 3; ++x)
      bad_hom[h][x] = h == 0 ? x : c3.inv(x);
  CHECK_THROWS_WITH_AS(semidirect_product(c3, c3b, bad_hom, "x"), doctest::Contains("not a homomorphism"),
                       InputError);
}

TEST_CASE("subgroups")
{
  const auto d8 = dihedral(8);
  const auto z = center(d8);
  CHECK(z.order() == 2);
  CHECK(is_normal(d8, z));
  CHECK(z.contains(0));
  CHECK(is_subset(trivial_subgroup(d8), z));
  CHECK(is_subset(z, whole_group(d8)));
  const auto as_group = subgroup_as_group(z);
  CHECK(as_group.order() == 2);
  const std::vector<Index> seed{z.members[1]};
  CHECK(normal_closure(d8, seed).order() == 2);
}

TEST_CASE("rule-based groups above the table limit")
{
  const auto g = frobenius_2p(11);
  CHECK(g.order() == 11264);
  CHECK_FALSE(g.has_table());
  const Index x = 12345 % 11264;
  CHECK(g.mul(x, g.inv(x)) == 0);
}
