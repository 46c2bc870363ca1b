#pragma once

#include <cstdint>
#include <vector>

#include "cycgroup/group.hpp"

namespace cycgroup {

/// Conjugacy classes as sorted index lists, ordered by least member.
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g);
std::size_t class_count(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);
std::uint64_t exponent(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);

/// H ⊇ H' ⊇ H'' ⊇ ..., stopping at the first repeated term (which is not repeated in the output).
std::vector<Subgroup> derived_series(const Subgroup& h);
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_solvable(const Subgroup& h);
bool is_solvable(const FiniteGroup& g);

/// γ1 = H, γ(i+1) = [H, γi], stopping at the first repeated term.
std::vector<Subgroup> lower_central_series(const Subgroup& h);
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
bool is_nilpotent(const Subgroup& h);
bool is_nilpotent(const FiniteGroup& g);

/// All normal subgroups, sorted by order then members. Requires |G| <= normal_enum_limit.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// Distinct cyclic subgroups, each with its generator recorded.
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g);

/// All subgroups, sorted by order then members. Requires |G| <= lattice_limit.
std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g, const Limits& limits = {});
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// Every maximal subgroup has prime index. Requires |G| <= lattice_limit.
bool is_supersolvable(const FiniteGroup& g, const Limits& limits = {});

/// Independent route: a chain of normal subgroups 1 = N0 < ... < Nk = G with prime
/// successive indices. Requires |G| <= normal_enum_limit.
bool has_prime_index_normal_series(const FiniteGroup& g, const Limits& limits = {});

Subgroup solvable_radical(const FiniteGroup& g, const Limits& limits = {});
Subgroup fitting_subgroup(const FiniteGroup& g, const Limits& limits = {});

/// Length of 1 = F0 < F1 < ... < Fh = G. Throws std::domain_error for non-solvable G.
unsigned fitting_height(const FiniteGroup& g, const Limits& limits = {});

/// Sorted list of element orders' multiset plus coarse invariants; equal for isomorphic groups.
struct IsoFingerprint {
  std::size_t order = 0;
  std::vector<std::uint64_t> sorted_orders;
  std::size_t classes = 0;
  std::size_t center_order = 0;
  std::vector<std::size_t> derived_orders;
  std::vector<std::uint64_t> abelianization_orders;

  friend bool operator==(const IsoFingerprint&, const IsoFingerprint&) = default;
};

IsoFingerprint iso_fingerprint(const FiniteGroup& g, const Limits& limits = {});

/// Requires |A| = |B| <= iso_limit when the fingerprints agree; different orders give false.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});

}  // namespace cycgroup
