#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycgroup/arith.hpp"
#include "cycgroup/group.hpp"

namespace cycgroup {

enum class ProjectiveKind { psl2, pgl2, pgammal2 };

// Standard permutation models.
FiniteGroup cyclic(unsigned n, const Limits& limits = {});
FiniteGroup elementary_abelian(unsigned p, unsigned k, const Limits& limits = {});
/// Direct product of cyclic groups acting on disjoint blocks of points.
FiniteGroup abelian(const std::vector<unsigned>& factors, const Limits& limits = {});
/// Dihedral group of the given (even) order, acting on order/2 points.
FiniteGroup dihedral(unsigned order, const Limits& limits = {});
FiniteGroup symmetric(unsigned m, const Limits& limits = {});
FiniteGroup alternating(unsigned m, const Limits& limits = {});

/// Action on the q + 1 points of the projective line, point q standing for infinity.
/// q in {7, 8, 9, 11, 13, 16, 17, 19}; PΓL only for q in {8, 9, 16}.
FiniteGroup projective(ProjectiveKind kind, unsigned q, const Limits& limits = {});

/// The index-2 overgroup of PSL(2,9) in PΓL(2,9) whose largest element order is 8.
FiniteGroup m10(const Limits& limits = {});
/// PSL(3,2), realized through the isomorphic PSL(2,7) model.
FiniteGroup psl32(const Limits& limits = {});

/// All invertible 2x2 matrices over GF(q), acting on the q^2 - 1 nonzero vectors. q in {2, 3}.
FiniteGroup gl2(unsigned q, const Limits& limits = {});

/// Generalized dihedral group A x| C2, C2 inverting A = C_base^n, base in {3, 4}.
FiniteGroup wall_I(unsigned base, unsigned n, const Limits& limits = {});
/// D8 x D8.
FiniteGroup wall_II(const Limits& limits = {});
/// D8^r modulo the central tuples with an even number of non-trivial entries; order 2 * 4^r, r <= 5.
FiniteGroup wall_III(unsigned r, const Limits& limits = {});
/// GF(2)^(2r) x| <c>, where c fixes each y_i and sends x_i to x_i + y_i; order 2^(2r+1), r <= 6.
FiniteGroup wall_IV(unsigned r, const Limits& limits = {});

/// GF(2^m) x| C_p with C_p acting by multiplication by an element of order p,
/// m the multiplicative order of 2 mod p. Odd prime p <= 31 with m <= 12.
FiniteGroup frobenius_2p(unsigned p, const Limits& limits = {});
/// {(a, b, c) in GF(p)^3 : a + b + c = 0} x| S3 permuting coordinates, p prime >= 5.
FiniteGroup fdm_s3(unsigned p, const Limits& limits = {});
/// GF(p)^2 x| C4 with the generator acting as v -> v [[0, 1], [-1, 0]], p prime = 3 mod 4.
FiniteGroup c4_module(unsigned p, const Limits& limits = {});

/// Parsed construction string.
///
///   spec     := "product:" spec ("," spec)+
///             | "power:" spec "^" n
///             | "quotient:" spec "/" ("center" | "derived" | "order=" n)
///             | "derived:" spec
///             | atom
///   atom     := "c" n ["^" k]            cyclic group or its direct power
///             | family [":" params]
///   params   := value (":" value)*       value is a number or key=number
///
/// Families: trivial, c|cyclic:n, elab:p^k, abelian:n1xn2x..., dihedral:2n, sym:m, alt:m,
/// psl2:q, pgl2:q, pgammal2:q, m10, psl32, gl2:q, wall1:c3^n|c4^n, wall2, wall3:r, wall4:r,
/// frob:p, fdm:p, c4mod:p, perm:degree:cycles;cycles;...
struct ConstructionSpec {
  enum class Family {
    trivial, cyclic, cyclic_power, elementary_abelian, abelian, dihedral, symmetric, alternating,
    psl2, pgl2, pgammal2, m10, psl32, gl2, wall_I_3, wall_I_4, wall_II, wall_III, wall_IV,
    frobenius_2p, fdm_s3, c4_module, product, power, quotient, derived, permutations
  };

  Family family = Family::trivial;
  std::vector<unsigned> params;
  std::vector<ConstructionSpec> children;
  std::string text;      ///< canonical spec string
  std::string argument;  ///< raw payload for quotient selectors and permutation generators
};

/// Parse errors are InputError with the failing position in the message.
ConstructionSpec parse_spec(const std::string& text);
FiniteGroup build(const ConstructionSpec& spec, const Limits& limits = {});
/// parse_spec + build; the group's label is the canonical spec string.
FiniteGroup construct(const std::string& text, const Limits& limits = {});

/// Closed-form α for families where one is known (the wall families, Frobenius groups, C_p).
std::optional<Rational> expected_alpha(const ConstructionSpec& spec);

/// Closed-form order of a construction, when the family has one.
std::optional<Integer> expected_order(const ConstructionSpec& spec);

}  // namespace cycgroup
