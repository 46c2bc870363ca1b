#include "cycgroup/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_map>

namespace cycgroup {

struct FiniteGroup::Impl {
  std::size_t n = 1;
  std::string label = "trivial";
  std::size_t table_limit = Limits{}.table_limit;
  std::vector<Index> gens;
  std::vector<std::uint64_t> orders{1};
  std::vector<Index> inverse{0};
  MulRule rule;
  std::vector<Permutation> perms;
  std::unordered_map<Permutation, Index, PermutationHash> perm_index;

  mutable std::once_flag table_once;
  mutable std::vector<Index> table;
  mutable std::atomic<bool> table_ready{false};

  Index slow_mul(Index a, Index b) const
  {
    if (rule)
      return rule(a, b);
    return perm_index.at(perms[a] * perms[b]);
  }

  Index mul(Index a, Index b) const
  {
    if (table_ready.load(std::memory_order_acquire))
      return table[static_cast<std::size_t>(a) * n + b];
    return slow_mul(a, b);
  }

  void materialize()
  {
    std::call_once(table_once, [this] {
      std::vector<Index> t(n * n);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          t[static_cast<std::size_t>(a) * n + b] = slow_mul(a, b);
      table = std::move(t);
      table_ready.store(true, std::memory_order_release);
    });
  }

  void adopt_table(std::vector<Index> t)
  {
    std::call_once(table_once, [&] {
      table = std::move(t);
      table_ready.store(true, std::memory_order_release);
    });
  }

  /// Element orders and inverses. Non-permutation groups use repeated
  /// multiplication, capped at n steps so a broken table cannot loop forever.
  void compute_orders()
  {
    orders.assign(n, 0);
    inverse.assign(n, 0);
    if (!perms.empty()) {
      for (Index a = 0; a < n; ++a) {
        orders[a] = perms[a].order();
        inverse[a] = perm_index.at(perms[a].inverse());
      }
      return;
    }
    for (Index a = 0; a < n; ++a) {
      Index prev = 0;
      Index x = a;
      std::uint64_t k = 1;
      while (x != 0) {
        prev = x;
        x = mul(x, a);
        if (++k > n)
          throw InputError("element " + std::to_string(a) + " has no finite order within the group");
      }
      orders[a] = k;
      inverse[a] = (a == 0) ? 0 : prev;
    }
  }
};

namespace {

std::vector<Index> greedy_generators(const FiniteGroup& g)
{
  std::vector<Index> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Index{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Index a, Index b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<Index> gens;
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  for (Index x : by_order) {
    if (mask[x])
      continue;
    gens.push_back(x);
    mask = g.closure_mask(gens);
  }
  return gens;
}

void validate_table(const std::vector<Index>& table, std::size_t n)
{
  if (n == 0)
    throw InputError("group order must be positive");
  if (table.size() != n * n)
    throw InputError("table is not n x n");
  for (Index v : table)
    if (v >= n)
      throw InputError("table entry out of range (closure violated)");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] != i || table[i * n] != i)
      throw InputError("element 0 is not the identity");
  }
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      Index v = table[i * n + j];
      if (seen[v])
        throw InputError("not a Latin square row (row " + std::to_string(i) + ")");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t i = 0; i < n; ++i) {
      Index v = table[i * n + j];
      if (seen[v])
        throw InputError("not a Latin square column (column " + std::to_string(j) + ")");
      seen[v] = true;
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a * n + b]); };
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      throw InputError("associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) +
                       ", " + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          check(a, b, c);
  }
  else {
    const std::size_t samples = std::min<std::size_t>(n * n * n, 100000);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s)
      check(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

FiniteGroup::FiniteGroup()
: impl_(std::make_shared<Impl>())
{
  impl_->adopt_table({0});
}

FiniteGroup::FiniteGroup(std::shared_ptr<Impl> impl)
: impl_(std::move(impl))
{}

FiniteGroup FiniteGroup::from_table(std::vector<Index> table, std::size_t n, std::string label,
                                    bool validate)
{
  if (validate)
    validate_table(table, n);
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->label = std::move(label);
  impl->table_limit = std::max(n, Limits{}.table_limit);
  impl->adopt_table(std::move(table));
  impl->compute_orders();
  FiniteGroup g(impl);
  impl->gens = greedy_generators(g);
  return g;
}

FiniteGroup FiniteGroup::from_rule(std::size_t n, MulRule rule, std::vector<Index> generators,
                                   std::string label, const Limits& limits)
{
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->label = std::move(label);
  impl->table_limit = limits.table_limit;
  impl->rule = std::move(rule);
  std::erase(generators, Index{0});
  impl->gens = std::move(generators);
  if (n <= limits.table_limit)
    impl->materialize();
  impl->compute_orders();
  return FiniteGroup(impl);
}

FiniteGroup FiniteGroup::close_generators(std::span<const Permutation> generators, std::size_t degree,
                                          std::string label, const Limits& limits)
{
  auto impl = std::make_shared<Impl>();
  impl->label = std::move(label);
  impl->table_limit = limits.table_limit;

  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw InputError("degree mismatch: generator of degree " + std::to_string(g.degree()) +
                       " in a group of degree " + std::to_string(degree));
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }

  impl->perms.push_back(Permutation::identity(degree));
  impl->perm_index.emplace(impl->perms.back(), 0);
  for (std::size_t head = 0; head < impl->perms.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = impl->perms[head] * g;
      if (impl->perm_index.contains(next))
        continue;
      if (impl->perms.size() >= limits.size_cap)
        throw SizeLimitError("size cap exceeded: closure of '" + impl->label + "' grows past " +
                             std::to_string(limits.size_cap));
      impl->perm_index.emplace(next, static_cast<Index>(impl->perms.size()));
      impl->perms.push_back(std::move(next));
    }
  }
  impl->n = impl->perms.size();
  for (const auto& g : gens)
    impl->gens.push_back(impl->perm_index.at(g));
  impl->compute_orders();
  if (impl->n == 1)
    impl->adopt_table({0});
  return FiniteGroup(impl);
}

std::size_t FiniteGroup::order() const { return impl_->n; }
const std::string& FiniteGroup::label() const { return impl_->label; }

FiniteGroup FiniteGroup::relabeled(std::string label) const
{
  auto impl = std::make_shared<Impl>();
  impl->n = impl_->n;
  impl->label = std::move(label);
  impl->table_limit = impl_->table_limit;
  impl->gens = impl_->gens;
  impl->orders = impl_->orders;
  impl->inverse = impl_->inverse;
  impl->rule = impl_->rule;
  impl->perms = impl_->perms;
  impl->perm_index = impl_->perm_index;
  if (impl_->table_ready.load(std::memory_order_acquire))
    impl->adopt_table(impl_->table);
  return FiniteGroup(impl);
}

Index FiniteGroup::mul(Index a, Index b) const { return impl_->mul(a, b); }
Index FiniteGroup::inv(Index a) const { return impl_->inverse[a]; }

Index FiniteGroup::pow(Index a, std::uint64_t k) const
{
  k %= impl_->orders[a];
  Index result = 0;
  Index base = a;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Index FiniteGroup::conj(Index x, Index g) const { return mul(mul(inv(g), x), g); }

Index FiniteGroup::commutator(Index a, Index b) const
{
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::uint64_t FiniteGroup::element_order(Index a) const { return impl_->orders[a]; }
std::span<const std::uint64_t> FiniteGroup::element_orders() const { return impl_->orders; }
std::span<const Index> FiniteGroup::generators() const { return impl_->gens; }

bool FiniteGroup::has_permutations() const { return !impl_->perms.empty(); }
const Permutation& FiniteGroup::permutation(Index a) const { return impl_->perms.at(a); }

std::optional<Index> FiniteGroup::index_of(const Permutation& p) const
{
  auto it = impl_->perm_index.find(p);
  if (it == impl_->perm_index.end())
    return std::nullopt;
  return it->second;
}

void FiniteGroup::prepare_table() const
{
  if (impl_->n <= impl_->table_limit)
    impl_->materialize();
}

bool FiniteGroup::has_table() const { return impl_->table_ready.load(std::memory_order_acquire); }

std::vector<bool> FiniteGroup::closure_mask(std::span<const Index> gens) const
{
  std::vector<bool> mask(order(), false);
  std::vector<Index> queue{0};
  mask[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Index g : gens) {
      Index y = mul(queue[head], g);
      if (!mask[y]) {
        mask[y] = true;
        queue.push_back(y);
      }
    }
  }
  return mask;
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(Index x) const
{
  return std::binary_search(members.begin(), members.end(), x);
}

std::vector<bool> Subgroup::mask() const
{
  std::vector<bool> m(parent.order(), false);
  for (Index x : members)
    m[x] = true;
  return m;
}

Subgroup subgroup_from_mask(const FiniteGroup& group, const std::vector<bool>& mask)
{
  Subgroup s{group, {}, {}, Normality::unknown};
  for (Index x = 0; x < mask.size(); ++x)
    if (mask[x])
      s.members.push_back(x);
  return s;
}

Subgroup generate(const FiniteGroup& group, std::span<const Index> gens)
{
  Subgroup s = subgroup_from_mask(group, group.closure_mask(gens));
  for (Index g : gens)
    if (g != 0 && std::find(s.generators.begin(), s.generators.end(), g) == s.generators.end())
      s.generators.push_back(g);
  return s;
}

Subgroup whole_group(const FiniteGroup& group)
{
  Subgroup s{group, {}, {}, Normality::yes};
  s.members.resize(group.order());
  std::iota(s.members.begin(), s.members.end(), Index{0});
  s.generators.assign(group.generators().begin(), group.generators().end());
  return s;
}

Subgroup trivial_subgroup(const FiniteGroup& group)
{
  return Subgroup{group, {0}, {}, Normality::yes};
}

bool is_subset(const Subgroup& a, const Subgroup& b)
{
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

bool is_normal(const FiniteGroup& group, const Subgroup& sub)
{
  const auto& probe = sub.generators.empty() ? sub.members : sub.generators;
  for (Index g : group.generators())
    for (Index x : probe)
      if (!sub.contains(group.conj(x, g)))
        return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& group, std::span<const Index> seed)
{
  std::vector<Index> gens;
  for (Index x : seed)
    if (x != 0 && std::find(gens.begin(), gens.end(), x) == gens.end())
      gens.push_back(x);
  std::vector<bool> mask = group.closure_mask(gens);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Index g : group.generators()) {
        Index c = group.conj(gens[i], g);
        if (!mask[c]) {
          gens.push_back(c);
          mask = group.closure_mask(gens);
          changed = true;
        }
      }
    }
  }
  Subgroup s = subgroup_from_mask(group, mask);
  s.generators = std::move(gens);
  s.normal = Normality::yes;
  return s;
}

FiniteGroup subgroup_as_group(const Subgroup& sub, const Limits& limits)
{
  const FiniteGroup& parent = sub.parent;
  parent.prepare_table();
  std::vector<Index> parent_gens = sub.generators;
  if (parent_gens.empty() && sub.order() > 1) {
    std::vector<bool> mask = parent.closure_mask(parent_gens);
    for (Index x : sub.members) {
      if (mask[x])
        continue;
      parent_gens.push_back(x);
      mask = parent.closure_mask(parent_gens);
    }
  }
  std::unordered_map<Index, Index> local;
  local.reserve(sub.members.size());
  for (Index i = 0; i < sub.members.size(); ++i)
    local.emplace(sub.members[i], i);
  std::vector<Index> gens;
  for (Index g : parent_gens)
    gens.push_back(local.at(g));
  auto members = sub.members;
  auto rule = [parent, members, local = std::move(local)](Index a, Index b) {
    return local.at(parent.mul(members[a], members[b]));
  };
  return FiniteGroup::from_rule(members.size(), rule, gens,
                                parent.label() + ".sub(" + std::to_string(members.size()) + ")",
                                limits);
}

FiniteGroup quotient(const FiniteGroup& group, const Subgroup& normal_sub, const Limits& limits)
{
  if (!is_normal(group, normal_sub))
    throw InputError("not normal: cannot form the quotient of '" + group.label() + "'");
  group.prepare_table();
  const std::size_t n = group.order();
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> coset(n, unset);
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    if (coset[x] != unset)
      continue;
    const Index id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index m : normal_sub.members)
      coset[group.mul(x, m)] = id;
  }
  std::vector<Index> gens;
  for (Index g : group.generators()) {
    Index c = coset[g];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  auto rule = [group, reps, coset = std::move(coset)](Index a, Index b) {
    return coset[group.mul(reps[a], reps[b])];
  };
  return FiniteGroup::from_rule(reps.size(), rule, gens,
                                group.label() + "/N" + std::to_string(normal_sub.order()), limits);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits)
{
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  if (na * nb > limits.size_cap)
    throw SizeLimitError("size cap exceeded: product of order " + std::to_string(na * nb) +
                         " > " + std::to_string(limits.size_cap));
  a.prepare_table();
  b.prepare_table();
  std::vector<Index> gens;
  for (Index g : a.generators())
    gens.push_back(static_cast<Index>(g * nb));
  for (Index g : b.generators())
    gens.push_back(g);
  const Index nbi = static_cast<Index>(nb);
  auto rule = [a, b, nbi](Index x, Index y) {
    return a.mul(x / nbi, y / nbi) * nbi + b.mul(x % nbi, y % nbi);
  };
  return FiniteGroup::from_rule(na * nb, rule, gens, a.label() + " x " + b.label(), limits);
}

FiniteGroup direct_power(const FiniteGroup& g, unsigned n, const Limits& limits)
{
  if (n == 0)
    return FiniteGroup();
  FiniteGroup result = g;
  for (unsigned i = 1; i < n; ++i)
    result = direct_product(result, g, limits);
  return result.relabeled(n == 1 ? g.label() : "(" + g.label() + ")^" + std::to_string(n));
}

FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               std::vector<std::vector<Index>> action, std::string label,
                               const Limits& limits)
{
  const std::size_t nn = normal.order();
  const std::size_t nh = acting.order();
  if (nn * nh > limits.size_cap)
    throw SizeLimitError("size cap exceeded: semidirect product of order " +
                         std::to_string(nn * nh) + " > " + std::to_string(limits.size_cap));
  if (action.size() != nh)
    throw InputError("not a homomorphism: action needs one automorphism per acting element");
  normal.prepare_table();
  acting.prepare_table();

  std::vector<bool> seen(nn);
  for (const auto& phi : action) {
    if (phi.size() != nn)
      throw InputError("not an automorphism: wrong image length");
    std::fill(seen.begin(), seen.end(), false);
    for (Index v : phi) {
      if (v >= nn || seen[v])
        throw InputError("not an automorphism: map is not bijective");
      seen[v] = true;
    }
    for (Index x = 0; x < nn; ++x)
      for (Index g : normal.generators())
        if (phi[normal.mul(x, g)] != normal.mul(phi[x], phi[g]))
          throw InputError("not an automorphism: map is not multiplicative");
  }
  for (Index x = 0; x < nn; ++x)
    if (action[0][x] != x)
      throw InputError("not a homomorphism: identity acts non-trivially");
  for (Index h = 0; h < nh; ++h)
    for (Index g : acting.generators()) {
      const auto& composite = action[acting.mul(h, g)];
      for (Index x = 0; x < nn; ++x)
        if (composite[x] != action[h][action[g][x]])
          throw InputError("not a homomorphism: action does not respect the acting group's product");
    }

  std::vector<Index> gens;
  const Index nhi = static_cast<Index>(nh);
  for (Index g : normal.generators())
    gens.push_back(g * nhi);
  for (Index g : acting.generators())
    gens.push_back(g);
  auto rule = [normal, acting, nhi, action = std::move(action)](Index x, Index y) {
    const Index n1 = x / nhi, h1 = x % nhi, n2 = y / nhi, h2 = y % nhi;
    return normal.mul(n1, action[h1][n2]) * nhi + acting.mul(h1, h2);
  };
  return FiniteGroup::from_rule(nn * nh, rule, gens, std::move(label), limits);
}

}  // namespace cycgroup
