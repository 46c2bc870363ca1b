#include "cycgroup/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cycgroup/arith.hpp"

namespace cycgroup {

namespace {

void require_limit(const FiniteGroup& g, std::size_t limit, const char* what)
{
  if (g.order() > limit)
    throw SizeLimitError(std::string("size limit: ") + what + " needs |G| <= " + std::to_string(limit) +
                         ", got " + std::to_string(g.order()) + " for '" + g.label() + "'");
}

/// Smallest subgroup containing `seed` and closed under conjugation by `conjugators`.
Subgroup closure_under_conjugation(const FiniteGroup& g, std::vector<Index> seed,
                                   std::span<const Index> conjugators)
{
  std::vector<Index> gens;
  for (Index x : seed)
    if (x != 0 && std::find(gens.begin(), gens.end(), x) == gens.end())
      gens.push_back(x);
  std::vector<bool> mask = g.closure_mask(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Index c : conjugators) {
      Index y = g.conj(gens[i], c);
      if (!mask[y]) {
        gens.push_back(y);
        mask = g.closure_mask(gens);
      }
    }
  }
  Subgroup s = subgroup_from_mask(g, mask);
  s.generators = std::move(gens);
  return s;
}

const std::vector<Index>& generators_of(const Subgroup& h)
{
  return h.generators.empty() ? h.members : h.generators;
}

Subgroup derived_subgroup(const Subgroup& h)
{
  const auto& gens = generators_of(h);
  std::vector<Index> seed;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seed.push_back(h.parent.commutator(gens[i], gens[j]));
  return closure_under_conjugation(h.parent, std::move(seed), gens);
}

}  // namespace

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g)
{
  g.prepare_table();
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::vector<Index> orbit{x};
    seen[x] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Index s : g.generators()) {
        Index y = g.conj(orbit[head], s);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::size_t class_count(const FiniteGroup& g)
{
  return conjugacy_classes(g).size();
}

bool is_abelian(const FiniteGroup& g)
{
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i]))
        return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g)
{
  for (auto o : g.element_orders())
    if (o == g.order())
      return true;
  return false;
}

std::uint64_t exponent(const FiniteGroup& g)
{
  std::uint64_t e = 1;
  for (auto o : g.element_orders())
    e = lcm(e, o);
  return e;
}

Subgroup center(const FiniteGroup& g)
{
  std::vector<bool> mask(g.order(), false);
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index s : g.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    }
    mask[x] = central;
  }
  Subgroup z = subgroup_from_mask(g, mask);
  z.normal = Normality::yes;
  return z;
}

std::vector<Subgroup> derived_series(const Subgroup& h)
{
  std::vector<Subgroup> series{h};
  for (;;) {
    Subgroup next = derived_subgroup(series.back());
    if (next.members == series.back().members)
      return series;
    series.push_back(std::move(next));
  }
}

std::vector<Subgroup> derived_series(const FiniteGroup& g)
{
  g.prepare_table();
  return derived_series(whole_group(g));
}

bool is_solvable(const Subgroup& h) { return derived_series(h).back().is_trivial(); }
bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().is_trivial(); }

std::vector<Subgroup> lower_central_series(const Subgroup& h)
{
  const auto& gens = generators_of(h);
  std::vector<Subgroup> series{h};
  for (;;) {
    const auto& current = generators_of(series.back());
    std::vector<Index> seed;
    for (Index a : gens)
      for (Index b : current)
        seed.push_back(h.parent.commutator(a, b));
    Subgroup next = closure_under_conjugation(h.parent, std::move(seed), gens);
    if (next.members == series.back().members)
      return series;
    series.push_back(std::move(next));
  }
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g)
{
  g.prepare_table();
  return lower_central_series(whole_group(g));
}

bool is_nilpotent(const Subgroup& h) { return lower_central_series(h).back().is_trivial(); }
bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().is_trivial(); }

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits)
{
  require_limit(g, limits.normal_enum_limit, "normal subgroup enumeration");
  g.prepare_table();
  const auto classes = conjugacy_classes(g);

  std::map<std::vector<Index>, Subgroup> found;
  std::vector<std::vector<Index>> queue;
  Subgroup one = trivial_subgroup(g);
  queue.push_back(one.members);
  found.emplace(one.members, one);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Subgroup current = found.at(queue[head]);
    for (const auto& cls : classes) {
      if (current.contains(cls.front()))
        continue;
      std::vector<Index> seed = current.generators;
      seed.push_back(cls.front());
      Subgroup next = normal_closure(g, seed);
      if (found.contains(next.members))
        continue;
      queue.push_back(next.members);
      found.emplace(next.members, std::move(next));
    }
  }

  std::vector<Subgroup> out;
  for (auto& [members, s] : found)
    out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g)
{
  std::map<std::vector<Index>, Subgroup> found;
  for (Index x = 0; x < g.order(); ++x) {
    std::vector<Index> members;
    Index y = 0;
    do {
      members.push_back(y);
      y = g.mul(y, x);
    } while (y != 0);
    std::sort(members.begin(), members.end());
    if (found.contains(members))
      continue;
    Subgroup s{g, members, {}, Normality::unknown};
    if (x != 0)
      s.generators.push_back(x);
    found.emplace(std::move(members), std::move(s));
  }
  std::vector<Subgroup> out;
  for (auto& [m, s] : found)
    out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g, const Limits& limits)
{
  require_limit(g, limits.lattice_limit, "subgroup lattice");
  g.prepare_table();
  const auto cyclic = cyclic_subgroups(g);

  std::map<std::vector<Index>, Subgroup> found;
  std::vector<std::vector<Index>> queue;
  for (const auto& c : cyclic) {
    found.emplace(c.members, c);
    queue.push_back(c.members);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Subgroup current = found.at(queue[head]);
    const auto mask = current.mask();
    for (const auto& c : cyclic) {
      if (c.generators.empty() || mask[c.generators.front()])
        continue;
      std::vector<Index> gens = current.generators;
      gens.push_back(c.generators.front());
      Subgroup join = generate(g, gens);
      if (found.contains(join.members))
        continue;
      queue.push_back(join.members);
      found.emplace(join.members, std::move(join));
    }
  }

  std::vector<Subgroup> out;
  for (auto& [m, s] : found)
    out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, const Limits& limits)
{
  auto lattice = subgroup_lattice(g, limits);
  std::vector<Subgroup> proper;
  for (auto& s : lattice)
    if (s.order() < g.order())
      proper.push_back(std::move(s));

  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < proper.size() && maximal; ++j) {
      if (proper[j].order() > proper[i].order() && proper[j].order() % proper[i].order() == 0 &&
          is_subset(proper[i], proper[j]))
        maximal = false;
    }
    if (maximal)
      out.push_back(proper[i]);
  }
  return out;
}

bool is_supersolvable(const FiniteGroup& g, const Limits& limits)
{
  for (const auto& m : maximal_subgroups(g, limits))
    if (!is_prime(g.order() / m.order()))
      return false;
  return true;
}

bool has_prime_index_normal_series(const FiniteGroup& g, const Limits& limits)
{
  const auto normals = normal_subgroups(g, limits);
  std::vector<bool> reachable(normals.size(), false);
  reachable[0] = true;
  for (std::size_t j = 1; j < normals.size(); ++j) {
    for (std::size_t i = 0; i < j && !reachable[j]; ++i) {
      if (!reachable[i] || normals[j].order() % normals[i].order() != 0)
        continue;
      if (is_prime(normals[j].order() / normals[i].order()) && is_subset(normals[i], normals[j]))
        reachable[j] = true;
    }
  }
  return reachable.back();
}

Subgroup solvable_radical(const FiniteGroup& g, const Limits& limits)
{
  const auto normals = normal_subgroups(g, limits);
  for (auto it = normals.rbegin(); it != normals.rend(); ++it)
    if (is_solvable(*it))
      return *it;
  return trivial_subgroup(g);
}

Subgroup fitting_subgroup(const FiniteGroup& g, const Limits& limits)
{
  const auto normals = normal_subgroups(g, limits);
  for (auto it = normals.rbegin(); it != normals.rend(); ++it)
    if (is_nilpotent(*it))
      return *it;
  return trivial_subgroup(g);
}

unsigned fitting_height(const FiniteGroup& g, const Limits& limits)
{
  if (!is_solvable(g))
    throw std::domain_error("fitting height is undefined for the non-solvable group '" + g.label() + "'");
  unsigned height = 0;
  FiniteGroup current = g;
  while (current.order() > 1) {
    Subgroup f = fitting_subgroup(current, limits);
    current = quotient(current, f, limits);
    ++height;
  }
  return height;
}

IsoFingerprint iso_fingerprint(const FiniteGroup& g, const Limits& limits)
{
  IsoFingerprint fp;
  fp.order = g.order();
  fp.sorted_orders.assign(g.element_orders().begin(), g.element_orders().end());
  std::sort(fp.sorted_orders.begin(), fp.sorted_orders.end());
  fp.classes = class_count(g);
  fp.center_order = center(g).order();
  const auto series = derived_series(g);
  for (const auto& s : series)
    fp.derived_orders.push_back(s.order());
  if (series.size() > 1) {
    FiniteGroup ab = quotient(g, series[1], limits);
    fp.abelianization_orders.assign(ab.element_orders().begin(), ab.element_orders().end());
  }
  else {
    fp.abelianization_orders = {1};
  }
  std::sort(fp.abelianization_orders.begin(), fp.abelianization_orders.end());
  return fp;
}

namespace {

std::vector<Index> small_generating_sequence(const FiniteGroup& g)
{
  const auto n = g.order();
  if (n == 1)
    return {};
  for (Index x = 0; x < n; ++x)
    if (g.element_order(x) == n)
      return {x};
  // Two generators suffice for most small groups; prefer high-order elements.
  std::vector<Index> by_order(n);
  for (Index x = 0; x < n; ++x)
    by_order[x] = x;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Index a, Index b) { return g.element_order(a) > g.element_order(b); });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Index> pair{by_order[i], by_order[j]};
      const auto mask = g.closure_mask(pair);
      if (std::all_of(mask.begin(), mask.end(), [](bool b) { return b; }))
        return pair;
    }
  }
  std::vector<Index> gens;
  std::vector<bool> mask(n, false);
  mask[0] = true;
  for (Index x : by_order) {
    if (mask[x])
      continue;
    gens.push_back(x);
    mask = g.closure_mask(gens);
  }
  return gens;
}

/// Extends gens[i] -> images[i] over the subgroup generated by the first k generators.
/// Returns false on an inconsistency (not a well-defined homomorphism).
bool extend_map(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Index>& gens,
                const std::vector<Index>& images, std::size_t k, std::vector<Index>& map)
{
  constexpr Index unset = static_cast<Index>(-1);
  std::fill(map.begin(), map.end(), unset);
  map[0] = 0;
  std::vector<Index> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index x = queue[head];
    for (std::size_t j = 0; j < k; ++j) {
      const Index y = a.mul(x, gens[j]);
      const Index image = b.mul(map[x], images[j]);
      if (map[y] == unset) {
        map[y] = image;
        queue.push_back(y);
      }
      else if (map[y] != image) {
        return false;
      }
    }
  }
  return true;
}

bool search_images(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Index>& gens,
                   std::vector<Index>& images, std::vector<Index>& map)
{
  const std::size_t k = images.size();
  if (k > 0 && !extend_map(a, b, gens, images, k, map))
    return false;
  if (k == gens.size()) {
    std::vector<bool> hit(b.order(), false);
    for (Index v : map) {
      if (hit[v])
        return false;
      hit[v] = true;
    }
    return true;
  }
  for (Index y = 0; y < b.order(); ++y) {
    if (b.element_order(y) != a.element_order(gens[k]))
      continue;
    images.push_back(y);
    if (search_images(a, b, gens, images, map))
      return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits)
{
  if (a.order() != b.order())
    return false;
  require_limit(a, limits.iso_limit, "isomorphism test");
  a.prepare_table();
  b.prepare_table();
  if (iso_fingerprint(a, limits) != iso_fingerprint(b, limits))
    return false;
  const auto gens = small_generating_sequence(a);
  std::vector<Index> images;
  std::vector<Index> map(a.order());
  return search_images(a, b, gens, images, map);
}

}  // namespace cycgroup
