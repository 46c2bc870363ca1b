#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycgroup/permutation.hpp"

namespace cycgroup {

using Index = std::uint32_t;

/// Size caps shared by the structural algorithms.
struct Limits {
  std::size_t table_limit = 2048;      ///< largest order that gets a materialized Cayley table
  std::size_t lattice_limit = 200;     ///< subgroup lattice, maximal subgroups, supersolvability
  std::size_t normal_enum_limit = 400; ///< normal subgroups, radicals, Fitting series
  std::size_t iso_limit = 100;         ///< isomorphism search
  std::size_t size_cap = 6000;         ///< generator closure and products
};

/// A requested group or search exceeds one of the configured limits.
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user-facing input (tables, generators, spec strings).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable finite group on element indices 0..order-1, with 0 the identity.
///
/// Copies share the underlying data. Multiplication goes through a Cayley table
/// when one has been materialized (orders up to `Limits::table_limit`), otherwise
/// through permutation composition or a product rule over component groups.
class FiniteGroup {
public:
  using MulRule = std::function<Index(Index, Index)>;

  FiniteGroup();  ///< trivial group

  /// Cayley table in row-major order, `table[i * n + j] = i * j`.
  /// With `validate`, checks identity, Latin rows/columns and associativity
  /// (all triples for n <= 64, otherwise min(n^3, 10^5) random triples).
  static FiniteGroup from_table(std::vector<Index> table, std::size_t n, std::string label,
                                bool validate = true);

  /// Group given by a multiplication rule, as for direct and semidirect products.
  /// The rule must define a group with identity 0 generated by `generators`.
  static FiniteGroup from_rule(std::size_t n, MulRule rule, std::vector<Index> generators,
                               std::string label, const Limits& limits = {});

  /// Breadth-first closure of `generators` under composition. Element 0 is the
  /// identity; the remaining elements appear in discovery order.
  static FiniteGroup close_generators(std::span<const Permutation> generators, std::size_t degree,
                                      std::string label, const Limits& limits = {});

  std::size_t order() const;
  static constexpr Index identity() { return 0; }
  const std::string& label() const;
  FiniteGroup relabeled(std::string label) const;

  Index mul(Index a, Index b) const;
  Index inv(Index a) const;
  Index pow(Index a, std::uint64_t k) const;
  /// g^-1 x g
  Index conj(Index x, Index g) const;
  Index commutator(Index a, Index b) const;
  std::uint64_t element_order(Index a) const;
  std::span<const std::uint64_t> element_orders() const;

  std::span<const Index> generators() const;

  bool has_permutations() const;
  const Permutation& permutation(Index a) const;
  std::optional<Index> index_of(const Permutation& p) const;

  /// Materializes the Cayley table if the order is within the table limit.
  /// Safe to call concurrently; later calls are no-ops.
  void prepare_table() const;
  bool has_table() const;

  /// Elements in the subgroup generated by `gens`, as a membership mask.
  std::vector<bool> closure_mask(std::span<const Index> gens) const;

private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;
};

enum class Normality { unknown, yes, no };

/// Subgroup of a parent group, stored as sorted element indices.
struct Subgroup {
  FiniteGroup parent;
  std::vector<Index> members;
  std::vector<Index> generators;
  Normality normal = Normality::unknown;

  std::size_t order() const { return members.size(); }
  bool contains(Index x) const;
  bool is_trivial() const { return members.size() == 1; }
  std::vector<bool> mask() const;
};

/// Subgroup generated by `gens` inside `group`.
Subgroup generate(const FiniteGroup& group, std::span<const Index> gens);
Subgroup whole_group(const FiniteGroup& group);
Subgroup trivial_subgroup(const FiniteGroup& group);
Subgroup subgroup_from_mask(const FiniteGroup& group, const std::vector<bool>& mask);

bool is_subset(const Subgroup& a, const Subgroup& b);
bool is_normal(const FiniteGroup& group, const Subgroup& sub);

/// Smallest normal subgroup containing `seed`.
Subgroup normal_closure(const FiniteGroup& group, std::span<const Index> seed);

/// The subgroup as a group in its own right, elements relabeled in member order.
FiniteGroup subgroup_as_group(const Subgroup& sub, const Limits& limits = {});

/// Coset group G/N with the least element index of each coset as representative.
/// Throws InputError if N is not normal.
FiniteGroup quotient(const FiniteGroup& group, const Subgroup& normal_sub, const Limits& limits = {});

/// Index-pair product, (a, b) stored at a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});
FiniteGroup direct_power(const FiniteGroup& g, unsigned n, const Limits& limits = {});

/// Left action of `acting` on `normal`: `action[h][n]` is the image of n under h.
/// The product is (n1, h1)(n2, h2) = (n1 * h1(n2), h1 h2), stored at n * |H| + h.
/// Throws InputError if an image is not an automorphism or the map is not a homomorphism.
FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               std::vector<std::vector<Index>> action, std::string label,
                               const Limits& limits = {});

}  // namespace cycgroup
