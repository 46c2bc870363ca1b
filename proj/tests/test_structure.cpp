#include <doctest.h>

#include "cycgroup/constructions.hpp"
#include "cycgroup/structure.hpp"

using namespace cycgroup;

namespace {

std::vector<std::size_t> orders_of(const std::vector<Subgroup>& subs)
{
  std::vector<std::size_t> out;
  for (const auto& s : subs)
    out.push_back(s.order());
  return out;
}

std::size_t brute_class_count(const FiniteGroup& g)
{
  std::vector<bool> seen(g.order());
  std::size_t classes = 0;
  for (Index x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    ++classes;
    for (Index y = 0; y < g.order(); ++y)
      seen[g.conj(x, y)] = true;
  }
  return classes;
}

const std::vector<std::string> small_specs{
  "c1", "c6", "c2^3", "sym:3", "sym:4", "dihedral:8", "dihedral:12", "alt:4", "gl2:3", "derived:gl2:3",
  "derived:derived:gl2:3", "wall1:c3^2", "wall3:r=2", "wall4:r=2", "frob:p=5", "c4mod:p=3", "fdm:p=5",
  "product:c4,sym:3", "perm:5:(0 1 2 3 4);(1 2 4 3)", "perm:7:(0 1 2 3 4 5 6);(1 2 4)(3 6 5)", "alt:5",
};

}  // namespace

TEST_CASE("conjugacy classes")
{
  CHECK(class_count(symmetric(3)) == 3);
  CHECK(class_count(dihedral(8)) == 5);
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(class_count(elementary_abelian(2, n)) == (std::size_t{1} << n));
  const auto classes = conjugacy_classes(symmetric(3));
  CHECK(classes[0] == std::vector<Index>{0});

  for (const auto& spec : small_specs) {
    const auto g = construct(spec);
    const auto cls = conjugacy_classes(g);
    std::size_t total = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      REQUIRE(g.order() % cls[i].size() == 0);
      total += cls[i].size();
      if (i > 0)
        REQUIRE(cls[i - 1].front() < cls[i].front());
    }
    REQUIRE(total == g.order());
    REQUIRE(cls.size() == brute_class_count(g));
  }
}

TEST_CASE("derived series and solvability")
{
  CHECK(orders_of(derived_series(symmetric(4))) == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(is_solvable(symmetric(4)));
  CHECK_FALSE(is_solvable(alternating(5)));
  CHECK(orders_of(derived_series(alternating(5))) == std::vector<std::size_t>{60});
  CHECK(is_solvable(cyclic(6)));
  CHECK_FALSE(is_solvable(projective(ProjectiveKind::psl2, 7)));
}

TEST_CASE("lower central series and nilpotency")
{
  CHECK(is_nilpotent(dihedral(8)));
  CHECK_FALSE(is_nilpotent(symmetric(3)));
  CHECK(is_nilpotent(construct("product:c3^2,c4^2")));
  CHECK(is_nilpotent(wall_III(3)));
  CHECK(orders_of(lower_central_series(dihedral(16))) == std::vector<std::size_t>{16, 4, 2, 1});
}

TEST_CASE("center and exponent")
{
  CHECK(center(dihedral(8)).order() == 2);
  CHECK(center(symmetric(3)).order() == 1);
  CHECK(center(construct("abelian:2x6")).order() == 12);
  CHECK(exponent(symmetric(3)) == 6);
  CHECK(exponent(elementary_abelian(2, 4)) == 2);
  CHECK(exponent(dihedral(8)) == 4);
}

TEST_CASE("normal subgroups")
{
  CHECK(orders_of(normal_subgroups(symmetric(4))) == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(normal_subgroups(alternating(5)).size() == 2);
  CHECK(normal_subgroups(cyclic(6)).size() == 4);
  for (const auto& spec : small_specs) {
    const auto g = construct(spec);
    for (const auto& n : normal_subgroups(g))
      for (Index x : n.members)
        for (Index y = 0; y < g.order(); ++y)
          REQUIRE(n.contains(g.conj(x, y)));
  }
  Limits tight;
  tight.normal_enum_limit = 50;
  CHECK_THROWS_AS(normal_subgroups(alternating(5), tight), SizeLimitError);
}

TEST_CASE("subgroup lattice")
{
  CHECK(subgroup_lattice(symmetric(3)).size() == 6);
  CHECK(subgroup_lattice(cyclic(7)).size() == 2);
  CHECK(subgroup_lattice(dihedral(8)).size() == 10);
  CHECK(subgroup_lattice(symmetric(4)).size() == 30);
  CHECK(subgroup_lattice(alternating(5)).size() == 59);
  CHECK(subgroup_lattice(elementary_abelian(2, 4)).size() == 67);

  for (const auto& spec : small_specs) {
    const auto g = construct(spec);
    const auto lattice = subgroup_lattice(g);
    for (const auto& h : lattice) {
      REQUIRE(g.order() % h.order() == 0);
      for (Index a : h.members)
        for (Index b : h.members)
          REQUIRE(h.contains(g.mul(a, g.inv(b))));
    }
    for (const auto& n : normal_subgroups(g)) {
      bool found = false;
      for (const auto& h : lattice)
        found = found || h.members == n.members;
      REQUIRE(found);
    }
  }
  Limits tight;
  tight.lattice_limit = 100;
  CHECK_THROWS_AS(subgroup_lattice(symmetric(5), tight), SizeLimitError);
}

TEST_CASE("maximal subgroups and supersolvability")
{
  const auto s4 = symmetric(4);
  std::vector<std::size_t> indices;
  for (const auto& m : maximal_subgroups(s4))
    indices.push_back(24 / m.order());
  std::sort(indices.begin(), indices.end());
  CHECK(indices == std::vector<std::size_t>{2, 3, 3, 3, 4, 4, 4, 4});
  CHECK_FALSE(is_supersolvable(s4));
  CHECK(is_supersolvable(symmetric(3)));
  CHECK_FALSE(is_supersolvable(alternating(4)));
  for (const std::string spec : {"dihedral:8", "c2^4", "wall3:r=2", "wall4:r=2", "derived:derived:gl2:3", "c3^3",
                                 "product:c3,c4", "abelian:3x9", "wall1:c4^2"}) {
    const auto g = construct(spec);
    REQUIRE(is_nilpotent(g));
    CHECK_MESSAGE(is_supersolvable(g), spec);
  }
  // independent route through chief series of prime length
  for (const auto& spec : small_specs) {
    const auto g = construct(spec);
    CHECK_MESSAGE(is_supersolvable(g) == has_prime_index_normal_series(g), spec);
  }
}

TEST_CASE("radicals and Fitting height")
{
  const auto s4 = symmetric(4);
  CHECK(fitting_subgroup(s4).order() == 4);
  CHECK(fitting_height(s4) == 3);
  CHECK(solvable_radical(alternating(5)).order() == 1);
  CHECK(solvable_radical(s4).order() == 24);
  CHECK(fitting_height(FiniteGroup()) == 0);
  CHECK(fitting_height(dihedral(8)) == 1);
  CHECK(fitting_height(cyclic(12)) == 1);
  CHECK(fitting_height(symmetric(3)) == 2);
  CHECK(fitting_subgroup(gl2(3)).order() == 8);
  CHECK(fitting_height(gl2(3)) == 3);
  CHECK_THROWS_AS(fitting_height(alternating(5)), std::domain_error);
  CHECK(solvable_radical(construct("product:c2,sym:5")).order() == 2);
}

TEST_CASE("isomorphism testing")
{
  CHECK(is_isomorphic(quotient(symmetric(4), normal_subgroups(symmetric(4))[1]), symmetric(3)));
  CHECK_FALSE(is_isomorphic(cyclic(4), elementary_abelian(2, 2)));
  CHECK_FALSE(is_isomorphic(cyclic(4), cyclic(5)));
  CHECK(is_isomorphic(gl2(2), symmetric(3)));
  CHECK(is_isomorphic(frobenius_2p(3), alternating(4)));
  const auto series = derived_series(gl2(3));
  REQUIRE(series.size() == 5);
  const auto q8 = construct("derived:derived:gl2:3");
  CHECK(is_isomorphic(subgroup_as_group(series[2]), q8));
  CHECK_FALSE(is_isomorphic(dihedral(8), q8));
  CHECK(is_isomorphic(wall_III(1), dihedral(8)));
  CHECK_FALSE(is_isomorphic(wall_III(2), wall_IV(2)));

  std::vector<FiniteGroup> groups;
  for (const auto& spec : small_specs) {
    const auto g = construct(spec);
    if (g.order() <= 100)
      groups.push_back(g);
  }
  for (const auto& a : groups) {
    REQUIRE(is_isomorphic(a, a));
    for (const auto& b : groups) {
      const bool ab = is_isomorphic(a, b);
      REQUIRE(ab == is_isomorphic(b, a));
      if (ab)
        REQUIRE(iso_fingerprint(a) == iso_fingerprint(b));
    }
  }
  Limits tight;
  tight.iso_limit = 10;
  CHECK_THROWS_AS(is_isomorphic(symmetric(4), symmetric(4), tight), SizeLimitError);
}
