#include "cycgroup/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cycgroup/structure.hpp"

namespace cycgroup {

namespace {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads; rethrows the lowest-index failure.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn)
{
  std::vector<std::optional<T>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      }
      catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads <= 1) {
    worker();
  }
  else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i])
      std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

Integer ipow(const Integer& base, unsigned n)
{
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i)
    r *= base;
  return r;
}

std::string frac(const Rational& q)
{
  return to_fraction_string(q);
}

std::string str(const Integer& v)
{
  return v.str();
}

bool is_elementary_abelian_2(const OrderSpectrum& s)
{
  return s.exponent() <= 2;
}

/// Least m >= 1 with x^m in N, for every element x.
std::vector<u64> orders_modulo(const FiniteGroup& g, const std::vector<bool>& nmask)
{
  std::vector<u64> out(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    Index y = x;
    u64 m = 1;
    while (!nmask[y]) {
      y = g.mul(y, x);
      ++m;
    }
    out[x] = m;
  }
  return out;
}

Rational density(const std::vector<Index>& elements, const std::vector<u64>& orders)
{
  std::map<u64, u64> tally;
  for (Index x : elements)
    ++tally[orders[x]];
  Rational total = 0;
  for (const auto& [o, count] : tally)
    total += Rational(count) / euler_phi(o);
  return total / elements.size();
}

std::vector<Index> all_elements(const FiniteGroup& g)
{
  std::vector<Index> v(g.order());
  for (Index i = 0; i < g.order(); ++i)
    v[i] = i;
  return v;
}

struct ShapeVerdict {
  bool match = false;
  bool label_trusted = false;
  std::string note;
};

/// Is G isomorphic to C2^n x base for some n >= 0? Exact within iso_limit; above it,
/// iso-fingerprint agreement is accepted and flagged as label-trusted.
ShapeVerdict c2_power_times(const CorpusEntry& e, const FiniteGroup& base, const std::string& base_name,
                            const Limits& limits)
{
  ShapeVerdict v;
  const std::size_t n = e.group.order();
  if (n % base.order() != 0)
    return v;
  std::size_t k = n / base.order();
  unsigned power = 0;
  while (k > 1 && k % 2 == 0) {
    k /= 2;
    ++power;
  }
  if (k != 1)
    return v;
  const FiniteGroup candidate =
    power == 0 ? base : direct_product(elementary_abelian(2, power, limits), base, limits);
  const std::string shape = power == 0 ? base_name : "C2^" + std::to_string(power) + " x " + base_name;
  if (n <= limits.iso_limit) {
    v.match = is_isomorphic(e.group, candidate, limits);
    v.note = v.match ? "isomorphic to " + shape : "";
  }
  else {
    v.match = iso_fingerprint(e.group, limits) == iso_fingerprint(candidate, limits);
    v.label_trusted = v.match;
    v.note = v.match ? "label-trusted: fingerprint of " + shape : "";
  }
  return v;
}

u64 least_prime(u64 n)
{
  return factorize(n).front().first;
}

/// α = (3t + 1) / (4t) with t = 3^n (n >= 1) or t = 2^r (r >= 1)?
bool in_wall_family(const Rational& a)
{
  if (a == 1 || a == make_rational(25, 32))
    return true;
  const Rational denom = 4 * a - 3;
  if (denom <= 0)
    return false;
  const Rational t = 1 / denom;
  if (denominator_of(t) != 1)
    return false;
  Integer v = numerator_of(t);
  if (v < 2)
    return false;
  const Integer base = v % 2 == 0 ? 2 : 3;
  while (v % base == 0)
    v /= base;
  return v == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Corpus

std::vector<std::string> default_corpus_specs()
{
  return {
    "trivial",
    "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12", "c13", "c14", "c15", "c16",
    "c18", "c20", "c25", "c27",
    "c2^2", "c2^3", "c2^4", "c2^5", "c3^2", "c3^3", "c4^2", "abelian:2x4", "abelian:2x2x4", "abelian:3x9",
    "dihedral:6", "dihedral:8", "dihedral:10", "dihedral:12", "dihedral:14", "dihedral:16", "dihedral:18",
    "dihedral:20", "dihedral:22", "dihedral:24",
    "sym:3", "sym:4", "sym:5", "alt:4", "alt:5",
    "gl2:2", "gl2:3", "derived:gl2:3", "derived:derived:gl2:3",
    "product:c2,sym:3", "product:c2^2,sym:3", "product:c2^3,sym:3",
    "product:c2,dihedral:8", "product:c2^2,dihedral:8", "product:c2^3,dihedral:8",
    "product:c2,sym:4", "product:c2^2,sym:4", "product:c2^3,sym:4",
    "product:c2,sym:5", "product:c2^2,sym:5",
    "product:c4,sym:3", "product:c3,sym:3", "product:c3,c5", "product:c3,sym:4",
    "wall1:c3^1", "wall1:c3^2", "wall1:c3^3", "wall1:c4^2", "wall1:c4^3",
    "wall2", "wall3:r=2", "wall3:r=3", "wall4:r=2", "wall4:r=3",
    "frob:p=3", "frob:p=5", "frob:p=7",
    "fdm:p=5", "fdm:p=7", "c4mod:p=3", "c4mod:p=7",
    "psl32", "pgl2:7", "alt:6",
    "quotient:sym:4/order=4", "quotient:gl2:3/center", "power:sym:3^2", "product:alt:5,alt:5",
    "perm:7:(0 1 2 3 4 5 6);(1 2 4)(3 6 5)",
    "perm:5:(0 1 2 3 4);(1 2 4 3)",
    "perm:13:(0 1 2 3 4 5 6 7 8 9 10 11 12);(1 3 9)(2 6 5)(4 12 10)(7 8 11)",
  };
}

CorpusEntry make_entry(const std::string& spec, const Limits& limits)
{
  CorpusEntry e;
  e.spec = parse_spec(spec);
  e.group = build(e.spec, limits);
  e.fingerprint = fingerprint(e.group, limits);
  e.spectrum = order_spectrum(e.group);
  return e;
}

std::vector<CorpusEntry> build_corpus(const std::vector<std::string>& specs, const Limits& limits, unsigned jobs)
{
  auto entries = parallel_map<CorpusEntry>(specs.size(), jobs,
                                           [&](std::size_t i) { return make_entry(specs[i], limits); });
  std::stable_sort(entries.begin(), entries.end(),
                   [](const CorpusEntry& a, const CorpusEntry& b) { return a.fingerprint.label < b.fingerprint.label; });
  return entries;
}

// ---------------------------------------------------------------------------
// Powers

OrderSpectrum power_spectrum(const OrderSpectrum& s, unsigned n)
{
  if (n == 0)
    throw std::invalid_argument("power_spectrum: n must be >= 1");
  const u64 e = s.exponent();
  OrderSpectrum out;
  out.group_order = ipow(s.group_order, n);
  std::map<u64, Integer> b_power;
  for (u64 d : divisors(e))
    b_power[d] = ipow(B(s, d), n);
  for (u64 l : divisors(e)) {
    std::vector<Integer> values;
    for (u64 d : divisors(l))
      values.push_back(b_power.at(d));
    const Integer r = r_from_B(l, values);
    if (r != 0)
      out.counts[l] = r;
  }
  return out;
}

OrderSpectrum product_spectrum(const OrderSpectrum& a, const OrderSpectrum& b)
{
  OrderSpectrum out;
  out.group_order = a.group_order * b.group_order;
  for (const auto& [da, ra] : a.counts)
    for (const auto& [db, rb] : b.counts)
      out.counts[lcm(da, db)] += ra * rb;
  return out;
}

Rational alpha_power(const OrderSpectrum& s, unsigned n)
{
  const OrderSpectrum p = power_spectrum(s, n);
  Rational total = 0;
  for (const auto& [l, r] : p.counts)
    total += Rational(r) / euler_phi(l);
  return total / p.group_order;
}

Rational power_limit(const OrderSpectrum& s)
{
  return make_rational(1, euler_phi(s.exponent()));
}

Rational decay_rate(const OrderSpectrum& s)
{
  const u64 e = s.exponent();
  Rational best = 0;
  for (const auto& [p, k] : factorize(e)) {
    (void)k;
    best = std::max(best, make_rational(B(s, e / p), s.group_order));
  }
  return best;
}

std::vector<ConvergenceRow> convergence_report(const OrderSpectrum& s, unsigned n_max)
{
  if (n_max == 0)
    throw std::invalid_argument("convergence_report: n_max must be >= 1");
  std::vector<ConvergenceRow> rows;
  const Rational limit = power_limit(s);
  for (unsigned n = 1; n <= n_max; ++n) {
    ConvergenceRow row;
    row.n = n;
    row.alpha_n = alpha_power(s, n);
    row.limit = limit;
    row.gap = abs(row.alpha_n - limit);
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational relative_alpha(const FiniteGroup& g, const std::vector<Index>& elements, const Subgroup& n)
{
  return density(elements, orders_modulo(g, n.mask()));
}

// ---------------------------------------------------------------------------
// Golden table

std::string default_table1_path()
{
  return std::string(CYCGROUP_DATA_DIR) + "/table1.csv";
}

std::vector<Table1Row> load_table1(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open golden table '" + path + "'");
  std::vector<Table1Row> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (quoted) {
        if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"')
          fields.back() += line[++i];
        else if (ch == '"')
          quoted = false;
        else
          fields.back() += ch;
      }
      else if (ch == '"')
        quoted = true;
      else if (ch == ',')
        fields.emplace_back();
      else
        fields.back() += ch;
    }
    if (fields.size() != 4)
      throw InputError("malformed golden row: '" + line + "'");
    rows.push_back({fields[0], fields[1], Integer(fields[2]), parse_fraction(fields[3])});
  }
  return rows;
}

std::vector<Table1Result> table1_report(const std::vector<Table1Row>& golden, const Limits& limits, unsigned jobs)
{
  return parallel_map<Table1Result>(golden.size(), jobs, [&](std::size_t i) {
    const FiniteGroup g = construct(golden[i].spec, limits);
    const OrderSpectrum s = order_spectrum(g);
    return Table1Result{golden[i], s.group_order, alpha(s)};
  });
}

std::vector<const CorpusEntry*> gap_search(const std::vector<CorpusEntry>& corpus, const Integer& g)
{
  std::vector<const CorpusEntry*> hits;
  for (const auto& e : corpus)
    if (e.fingerprint.order - e.fingerprint.c == g)
      hits.push_back(&e);
  return hits;
}

// ---------------------------------------------------------------------------
// Reports

void Report::add(std::string suite, std::string name, bool passed, std::string detail)
{
  checks.push_back({std::move(suite), std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other)
{
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::passed() const
{
  return failures() == 0;
}

std::size_t Report::failures() const
{
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::string render(const Report& report, Format format)
{
  std::ostringstream out;
  auto csv = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
      return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"')
        q += '"';
      q += ch;
    }
    return q + "\"";
  };
  switch (format) {
  case Format::csv:
    out << "suite,check,status,detail\n";
    for (const auto& c : report.checks)
      out << csv(c.suite) << ',' << csv(c.name) << ',' << (c.passed ? "PASS" : "FAIL") << ',' << csv(c.detail)
          << '\n';
    break;
  case Format::json:
    for (const auto& c : report.checks) {
      nlohmann::ordered_json j;
      j["suite"] = c.suite;
      j["check"] = c.name;
      j["status"] = c.passed ? "PASS" : "FAIL";
      j["detail"] = c.detail;
      out << j.dump() << '\n';
    }
    break;
  case Format::pretty:
    for (const auto& c : report.checks) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name;
      if (!c.detail.empty())
        out << "  (" << c.detail << ")";
      out << '\n';
    }
    out << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
    if (!report.passed()) {
      out << "failures:\n";
      for (const auto& c : report.checks)
        if (!c.passed)
          out << "  " << c.suite << ": " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
    }
    break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Suites

Report verify_table1(const Limits& limits, unsigned jobs)
{
  Report r;
  const auto golden = load_table1(default_table1_path());
  r.add("table1", "golden table has 21 rows", golden.size() == 21, std::to_string(golden.size()) + " rows");
  for (const auto& row : table1_report(golden, limits, jobs))
    r.add("table1", row.expected.name, row.matches(),
          "order " + str(row.order) + " alpha " + frac(row.alpha) + " ~ " + to_decimal_string(row.alpha) +
            "; expected " + str(row.expected.order) + " " + frac(row.expected.alpha));
  return r;
}

Report verify_named(const Limits& limits)
{
  Report r;
  const std::vector<std::pair<std::string, Rational>> named{
    {"sym:3", make_rational(5, 6)},      {"dihedral:8", make_rational(7, 8)},
    {"sym:4", make_rational(17, 24)},    {"sym:5", make_rational(67, 120)},
    {"c3", make_rational(2, 3)},         {"alt:4", make_rational(2, 3)},
    {"c8", make_rational(1, 2)},         {"c9", make_rational(1, 3)},
    {"c12", make_rational(1, 2)},        {"product:alt:5,alt:5", make_rational(77, 225)},
  };
  for (const auto& [spec, expected] : named) {
    const Rational a = alpha(order_spectrum(construct(spec, limits)));
    r.add("named", "alpha(" + spec + ") = " + frac(expected), a == expected, "computed " + frac(a));
  }
  for (const std::string base : {"sym:3", "sym:4", "sym:5", "dihedral:8"}) {
    const Rational a = alpha(order_spectrum(construct(base, limits)));
    for (unsigned n = 1; n <= 2; ++n) {
      const std::string spec = "product:c2^" + std::to_string(n) + "," + base;
      const Rational b = alpha(order_spectrum(construct(spec, limits)));
      r.add("named", "alpha(" + spec + ") = alpha(" + base + ")", a == b, frac(b) + " vs " + frac(a));
    }
  }
  return r;
}

Report verify_wall(const Limits& limits)
{
  Report r;
  const FiniteGroup d8 = dihedral(8, limits);
  for (unsigned base : {3u, 4u})
    for (unsigned n = 1; n <= 3; ++n) {
      const FiniteGroup g = wall_I(base, n, limits);
      const Integer t = ipow(base == 3 ? 3 : 2, n);
      const Rational expected = make_rational(3 * t + 1, 4 * t);
      const Rational a = alpha(order_spectrum(g));
      r.add("wall", "wall1 " + g.label() + " alpha = " + frac(expected), a == expected, "computed " + frac(a));
      // every element outside A has order 2; A sits at the even indices
      bool outside_involutions = true;
      for (Index x = 1; x < g.order(); x += 2)
        outside_involutions = outside_involutions && g.element_order(x) == 2;
      r.add("wall", "wall1 " + g.label() + " elements outside A are involutions", outside_involutions);
    }
  {
    const FiniteGroup g = wall_II(limits);
    const OrderSpectrum s = order_spectrum(g);
    r.add("wall", "wall2 alpha(D8 x D8) = 25/32", alpha(s) == make_rational(25, 32), "computed " + frac(alpha(s)));
    r.add("wall", "wall2 I(D8 x D8) = 36", involution_count(s) == 36, "computed " + str(involution_count(s)));
  }
  for (unsigned rr = 1; rr <= 4; ++rr) {
    const Integer t = ipow(2, rr);
    const Rational expected = make_rational(3 * t + 1, 4 * t);
    {
      const FiniteGroup g = wall_III(rr, limits);
      const OrderSpectrum s = order_spectrum(g);
      const std::string tag = "wall3 r=" + std::to_string(rr);
      r.add("wall", tag + " alpha = " + frac(expected), alpha(s) == expected, "computed " + frac(alpha(s)));
      r.add("wall", tag + " square roots of 1 = 4^r + 2^r", involution_count(s) == t * t + t,
            "computed " + str(involution_count(s)) + ", expected " + str(t * t + t));
      r.add("wall", tag + " elements of order 4 = 4^r - 2^r", s.count(4) == t * t - t,
            "computed " + str(s.count(4)));
      r.add("wall", tag + " order = 2 * 4^r", s.group_order == 2 * t * t, str(s.group_order));
    }
    {
      const FiniteGroup g = wall_IV(rr, limits);
      const OrderSpectrum s = order_spectrum(g);
      const std::string tag = "wall4 r=" + std::to_string(rr);
      r.add("wall", tag + " alpha = " + frac(expected), alpha(s) == expected, "computed " + frac(alpha(s)));
      r.add("wall", tag + " elements of order 4 = 2^(2r) - 2^r", s.count(4) == t * t - t,
            "computed " + str(s.count(4)) + ", expected " + str(t * t - t));
      r.add("wall", tag + " order = 2^(2r+1)", s.group_order == 2 * t * t, str(s.group_order));
    }
  }
  for (unsigned rr = 1; rr <= 5; ++rr) {
    const FiniteGroup g = wall_IV(rr, limits);
    // V at even indices, c at index 1
    std::size_t fixed = 0;
    for (Index v = 0; v < g.order(); v += 2)
      fixed += g.mul(v, 1) == g.mul(1, v);
    r.add("wall", "wall4 r=" + std::to_string(rr) + " c fixes 2^r vectors", fixed == (std::size_t{1} << rr),
          "computed " + std::to_string(fixed));
  }
  r.add("wall", "wall1:c4^1 isomorphic to D8", is_isomorphic(wall_I(4, 1, limits), d8, limits));
  r.add("wall", "wall3:r=1 isomorphic to D8", is_isomorphic(wall_III(1, limits), d8, limits));
  r.add("wall", "wall4:r=1 isomorphic to D8", is_isomorphic(wall_IV(1, limits), d8, limits));
  return r;
}

Report verify_modules(const Limits& limits)
{
  Report r;
  const Rational bound = make_rational(17, 24);
  for (u64 p : {5u, 7u, 11u, 13u}) {
    const FiniteGroup g = fdm_s3(static_cast<unsigned>(p), limits);
    const OrderSpectrum s = order_spectrum(g);
    const std::string tag = g.label();
    const Integer c = c_direct(s);
    const Integer expected = Integer(p * p + 7 * p + 2);
    r.add("modules", tag + " c = p^2 + 7p + 2", c == expected, "computed " + str(c) + ", expected " + str(expected));
    const bool counts = s.count(2) == 3 * p && s.count(3) == 2 * p * p && s.count(p) == p * p - 1 &&
                        s.count(2 * p) == 3 * p * p - 3 * p;
    r.add("modules", tag + " order counts 3p, 2p^2, p^2-1, 3p^2-3p", counts);
    const bool absent = s.count(6) == 0 && s.count(3 * p) == 0 && s.count(6 * p) == 0;
    r.add("modules", tag + " no elements of order 6, 3p, 6p", absent);
    r.add("modules", tag + " alpha < 17/24", alpha(s) < bound, frac(alpha(s)));
  }
  for (u64 p : {3u, 7u, 11u}) {
    const FiniteGroup g = c4_module(static_cast<unsigned>(p), limits);
    const OrderSpectrum s = order_spectrum(g);
    const std::string tag = g.label();
    const Integer c = c_direct(s);
    const Integer expected = Integer(2 * p * p + p + 2);
    r.add("modules", tag + " c = 2p^2 + p + 2", c == expected, "computed " + str(c) + ", expected " + str(expected));
    const bool counts = s.count(p) == p * p - 1 && s.count(2) == p * p && s.count(4) == 2 * p * p;
    r.add("modules", tag + " order counts p^2-1, p^2, 2p^2", counts);
    r.add("modules", tag + " alpha < 17/24", alpha(s) < bound, frac(alpha(s)));
  }
  return r;
}

Report verify_thresholds(const std::vector<CorpusEntry>& corpus, const Limits& limits)
{
  Report r;
  const FiniteGroup s5 = symmetric(5, limits);
  const FiniteGroup s4 = symmetric(4, limits);
  const FiniteGroup s3 = symmetric(3, limits);
  const FiniteGroup d8 = dihedral(8, limits);
  const Rational a_s5 = make_rational(67, 120);
  const Rational a_s4 = make_rational(17, 24);
  const Rational five_sixths = make_rational(5, 6);
  const Rational three_quarters = make_rational(3, 4);

  for (const auto& e : corpus) {
    const auto& f = e.fingerprint;
    const std::string label = f.label;
    if (!f.solvable) {
      bool ok = f.alpha <= a_s5;
      std::string detail = "alpha " + frac(f.alpha);
      if (ok && f.alpha == a_s5) {
        const auto v = c2_power_times(e, s5, "S5", limits);
        ok = v.match;
        detail += v.match ? "; equality, " + v.note : "; equality on a group not of shape C2^n x S5";
      }
      r.add("thresholds", "(a) non-solvable " + label + " alpha <= 67/120", ok, detail);
    }
    if (f.alpha >= five_sixths) {
      bool ok = false;
      std::string detail = "alpha " + frac(f.alpha);
      if (is_elementary_abelian_2(e.spectrum)) {
        ok = true;
        detail += "; elementary abelian 2-group";
      }
      else {
        for (const auto& [base, name] : {std::pair{d8, "D8"}, std::pair{s3, "S3"}}) {
          const auto v = c2_power_times(e, base, name, limits);
          if (v.match) {
            ok = true;
            detail += "; " + v.note;
            break;
          }
        }
      }
      r.add("thresholds", "(b) " + label + " with alpha >= 5/6 is C2^n, C2^n x D8 or C2^n x S3", ok, detail);
    }
    if (f.supersolvable.has_value() && !*f.supersolvable) {
      bool ok = f.alpha <= a_s4;
      std::string detail = "alpha " + frac(f.alpha);
      if (ok && f.alpha == a_s4) {
        const auto v = c2_power_times(e, s4, "S4", limits);
        ok = v.match;
        detail += v.match ? "; equality, " + v.note : "; equality on a group not of shape C2^n x S4";
      }
      r.add("thresholds", "(c) non-supersolvable " + label + " alpha <= 17/24", ok, detail);
    }
    const u64 order = f.order.convert_to<u64>();
    if (order > 1 && order % 2 == 1) {
      const u64 p = least_prime(order);
      const Rational bound = make_rational(2, p);
      bool ok = f.alpha <= bound;
      std::string detail = "alpha " + frac(f.alpha) + ", least prime " + std::to_string(p);
      if (ok && f.alpha == bound) {
        ok = order == p;
        detail += ok ? "; equality on C" + std::to_string(p) : "; equality on a group other than C_p";
      }
      r.add("thresholds", "(d) odd order " + label + " alpha <= 2/p", ok, detail);
    }
    if (f.alpha > three_quarters)
      r.add("thresholds", "(e) " + label + " alpha > 3/4 lies in the attainable set", in_wall_family(f.alpha),
            "alpha " + frac(f.alpha));
  }
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    const FiniteGroup g = frobenius_2p(p, limits);
    const OrderSpectrum s = order_spectrum(g);
    const unsigned m = static_cast<unsigned>(multiplicative_order(2, p));
    const bool spectrum_ok = s.counts.size() == 3 && s.count(2) == (Integer(1) << m) - 1 &&
                             s.count(p) == (Integer(1) << m) * (p - 1);
    r.add("thresholds", "frobenius " + g.label() + " alpha = 2/" + std::to_string(p),
          alpha(s) == make_rational(2, p), "computed " + frac(alpha(s)) + ", order " + str(s.group_order));
    r.add("thresholds", "frobenius " + g.label() + " spectrum {1, 2^m - 1, 2^m (p - 1)}", spectrum_ok);
  }
  return r;
}

Report verify_convergence(const std::vector<CorpusEntry>& corpus, const Limits& limits)
{
  Report r;
  const Rational hundredth = make_rational(1, 100);
  for (const std::string spec : {"sym:3", "dihedral:8", "c6", "alt:4"}) {
    const OrderSpectrum s = order_spectrum(construct(spec, limits));
    const auto rows = convergence_report(s, 30);
    const Rational g10 = rows[9].gap;
    const Rational g30 = rows[29].gap;
    r.add("convergence", spec + " gap(30) < gap(10)", g30 < g10,
          "limit " + frac(power_limit(s)) + ", gap(10) ~ " + to_decimal_string(g10, 12) + ", gap(30) ~ " +
            to_decimal_string(g30, 12) + ", decay rate " + frac(decay_rate(s)));
    r.add("convergence", spec + " gap(30) < 1/100", g30 < hundredth);
  }
  {
    const auto rows = convergence_report(order_spectrum(cyclic(2, limits)), 5);
    const bool zero = std::all_of(rows.begin(), rows.end(), [](const ConvergenceRow& row) { return row.gap == 0; });
    r.add("convergence", "c2 gaps are all 0", zero);
  }
  for (const auto& e : corpus) {
    const Rational a1 = alpha_power(e.spectrum, 1);
    bool ok = a1 == e.fingerprint.alpha;
    std::string detail = "n=1";
    if (ok && e.group.order() <= 24) {
      const FiniteGroup square = direct_power(e.group, 2, limits);
      const Rational oracle = alpha(order_spectrum(square));
      ok = alpha_power(e.spectrum, 2) == oracle;
      detail += ", n=2 against materialized square (" + frac(oracle) + ")";
    }
    r.add("convergence", "alpha_power(" + e.fingerprint.label + ") matches oracle", ok, detail);
  }
  return r;
}

Report verify_gaps(const std::vector<CorpusEntry>& corpus, const Limits& limits)
{
  Report r;
  const std::vector<std::pair<std::string, FiniteGroup>> witnesses{
    {"C11", cyclic(11, limits)},
    {"D22", dihedral(22, limits)},
    {"C4 x S3", direct_product(cyclic(4, limits), symmetric(3, limits), limits)},
  };
  std::vector<int> found(witnesses.size(), 0);
  for (const CorpusEntry* e : gap_search(corpus, 9)) {
    if (e->group.order() > 72)
      continue;
    std::string which;
    for (std::size_t i = 0; i < witnesses.size(); ++i)
      if (is_isomorphic(e->group, witnesses[i].second, limits)) {
        ++found[i];
        which = witnesses[i].first;
      }
    r.add("gaps", "gap 9 hit " + e->fingerprint.label + " is one of C11, D22, C4 x S3", !which.empty(),
          which.empty() ? "unexpected hit" : "isomorphic to " + which);
  }
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    r.add("gaps", "gap 9 witness " + witnesses[i].first + " present exactly once", found[i] == 1,
          std::to_string(found[i]) + " hit(s)");

  const FiniteGroup d8 = dihedral(8, limits);
  for (const auto& e : corpus) {
    if (is_elementary_abelian_2(e.spectrum))
      continue;
    const Integer gap = e.fingerprint.order - e.fingerprint.c;
    const bool bound = e.fingerprint.order <= 8 * gap;
    const bool equality = e.fingerprint.order == 8 * gap;
    const auto v = c2_power_times(e, d8, "D8", limits);
    r.add("gaps", e.fingerprint.label + " |G| <= 8(|G| - c), equality iff C2^n x D8", bound && equality == v.match,
          "|G| " + str(e.fingerprint.order) + ", gap " + str(gap) + (equality ? ", equality" : "") +
            (v.match ? "; " + v.note : ""));
  }

  std::vector<std::string> zero_hits, alpha_one;
  for (const CorpusEntry* e : gap_search(corpus, 0))
    zero_hits.push_back(e->fingerprint.label);
  for (const auto& e : corpus)
    if (e.fingerprint.alpha == 1)
      alpha_one.push_back(e.fingerprint.label);
  bool zero_are_elab = true;
  for (const CorpusEntry* e : gap_search(corpus, 0))
    zero_are_elab = zero_are_elab && is_elementary_abelian_2(e->spectrum);
  r.add("gaps", "gap 0 hits are exactly the alpha = 1 entries", zero_hits == alpha_one,
        std::to_string(zero_hits.size()) + " hits");
  r.add("gaps", "gap 0 hits are elementary abelian 2-groups", zero_are_elab);
  bool d8_hit = false;
  for (const CorpusEntry* e : gap_search(corpus, 1))
    d8_hit = d8_hit || e->fingerprint.label == "dihedral:8";
  r.add("gaps", "gap 1 contains dihedral:8", d8_hit);
  return r;
}

Report verify_cp_bounds(const std::vector<CorpusEntry>& corpus, const Limits& limits)
{
  Report r;
  for (const auto& e : corpus) {
    if (e.group.order() > limits.normal_enum_limit)
      continue;
    const auto& f = e.fingerprint;
    const Rational cp2 = f.cp * f.cp;
    if (!f.solvable) {
      const Subgroup sol = solvable_radical(e.group, limits);
      const Rational value = cp2 * make_rational(f.order, sol.order());
      r.add("cp-bounds", f.label + " cp^2 |G:sol(G)| <= 1", value <= 1,
            "cp " + frac(f.cp) + ", |sol| " + std::to_string(sol.order()) + ", value " + frac(value));
    }
    else {
      const Subgroup fit = fitting_subgroup(e.group, limits);
      const Rational value = cp2 * make_rational(f.order, fit.order());
      r.add("cp-bounds", f.label + " cp^2 |G:F(G)| <= 1", value <= 1,
            "cp " + frac(f.cp) + ", |F| " + std::to_string(fit.order()) + ", value " + frac(value));
      const FiniteGroup top = quotient(e.group, fit, limits);
      if (is_nilpotent(top))
        r.add("cp-bounds", f.label + " k(G) <= |F(G)| (G/F nilpotent)", f.classes <= fit.order(),
              "k " + std::to_string(f.classes) + ", |F| " + std::to_string(fit.order()));
    }
  }
  return r;
}

Report verify_sym_quotient(const Limits& limits)
{
  Report r;
  for (unsigned m : {3u, 4u, 5u}) {
    const FiniteGroup sm = symmetric(m, limits);
    const Rational a = alpha(order_spectrum(sm));
    for (unsigned n : {1u, 2u}) {
      const FiniteGroup g = direct_product(elementary_abelian(2, n, limits), sm, limits);
      const Rational b = alpha(order_spectrum(g));
      r.add("sym-quotient",
            "alpha(C2^" + std::to_string(n) + " x S" + std::to_string(m) + ") = alpha(S" + std::to_string(m) + ")",
            a == b, frac(b));
    }
  }
  const FiniteGroup gl = gl2(3, limits);
  const FiniteGroup s4 = symmetric(4, limits);
  const Rational a_gl = alpha(order_spectrum(gl));
  const Rational a_s4 = alpha(order_spectrum(s4));
  const FiniteGroup top = quotient(gl, center(gl), limits);
  r.add("sym-quotient", "GL(2,3)/Z isomorphic to S4", is_isomorphic(top, s4, limits));
  r.add("sym-quotient", "alpha(GL(2,3)) != alpha(S4)", a_gl != a_s4, frac(a_gl) + " vs " + frac(a_s4));
  r.add("sym-quotient", "alpha(GL(2,3)) < 17/24", a_gl < make_rational(17, 24), frac(a_gl));
  const Rational a_c2s4 = alpha(order_spectrum(direct_product(cyclic(2, limits), s4, limits)));
  r.add("sym-quotient", "alpha(C2 x S4) = 17/24", a_c2s4 == make_rational(17, 24), frac(a_c2s4));
  const Rational a_c22s3 =
    alpha(order_spectrum(direct_product(elementary_abelian(2, 2, limits), symmetric(3, limits), limits)));
  r.add("sym-quotient", "alpha(C2^2 x S3) = 5/6", a_c22s3 == make_rational(5, 6), frac(a_c22s3));
  return r;
}

Report verify_formulas(const std::vector<CorpusEntry>& corpus)
{
  Report r;
  std::map<unsigned, OrderSpectrum> c2_powers;
  for (unsigned n = 1; n <= 3; ++n)
    c2_powers[n] = power_spectrum(cyclic_spectrum(2), n);

  for (const auto& e : corpus) {
    const auto& s = e.spectrum;
    const std::string label = e.fingerprint.label;
    const Integer direct = c_direct(s);
    const Integer moebius = c_moebius(s);
    r.add("formulas", label + " c_direct = c_moebius", direct == moebius, str(direct) + " vs " + str(moebius));
    if (e.fingerprint.nilpotent) {
      const Integer nil = c_nilpotent(s);
      r.add("formulas", label + " c_nilpotent = c_direct", nil == direct, str(nil));
    }
    bool divisible = true;
    std::string bad;
    const u64 n = s.group_order.convert_to<u64>();
    for (u64 l : divisors(n))
      if (B(s, l) % l != 0) {
        divisible = false;
        bad = "fails at l = " + std::to_string(l);
        break;
      }
    r.add("formulas", label + " l | B(l) for every l | |G|", divisible, bad);

    bool stable = true;
    for (const auto& [k, c2] : c2_powers)
      stable = stable && alpha(product_spectrum(s, c2)) == e.fingerprint.alpha;
    r.add("formulas", label + " alpha(G x C2^n) = alpha(G), n <= 3", stable);

    const Integer tau = divisors(n).size();
    const bool cyclic_group = is_cyclic(e.group);
    r.add("formulas", label + " c(G) >= d(|G|), equality iff cyclic",
          direct >= tau && ((direct == tau) == cyclic_group),
          "c " + str(direct) + ", d(|G|) " + str(tau) + (cyclic_group ? ", cyclic" : ""));
  }

  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const auto& a = corpus[i];
      const auto& b = corpus[j];
      if (a.group.order() == 1 || b.group.order() == 1 || std::gcd(a.group.order(), b.group.order()) != 1)
        continue;
      const Integer prod = c_direct(product_spectrum(a.spectrum, b.spectrum));
      r.add("formulas", "c(" + a.fingerprint.label + " x " + b.fingerprint.label + ") = c(A) c(B)",
            prod == a.fingerprint.c * b.fingerprint.c, str(prod));
    }
  return r;
}

Report verify_inequalities(const std::vector<CorpusEntry>& corpus)
{
  Report r;
  for (const auto& e : corpus) {
    const auto& f = e.fingerprint;
    const Rational half = make_rational(1, 2);
    const Rational bound = half + make_rational(f.involutions, 2 * f.order);
    r.add("inequalities", f.label + " alpha <= 1/2 + I/(2|G|)", f.alpha <= bound,
          frac(f.alpha) + " <= " + frac(bound));
    const Integer lhs = f.involutions * f.involutions;
    const Integer rhs = Integer(f.classes) * f.order;
    r.add("inequalities", f.label + " I^2 <= k |G|", lhs <= rhs, str(lhs) + " <= " + str(rhs));
    if (f.alpha >= half) {
      const Rational t = 2 * f.alpha - 1;
      r.add("inequalities", f.label + " cp >= (2 alpha - 1)^2", f.cp >= t * t, frac(f.cp) + " >= " + frac(t * t));
    }
  }
  return r;
}

Report verify_quotients(const std::vector<CorpusEntry>& corpus, const Limits& limits)
{
  Report r;
  for (const auto& e : corpus) {
    const FiniteGroup& g = e.group;
    if (g.order() > limits.normal_enum_limit)
      continue;
    g.prepare_table();
    const std::string label = e.fingerprint.label;
    const Rational a = e.fingerprint.alpha;
    const auto normals = normal_subgroups(g, limits);
    const auto everything = all_elements(g);

    std::vector<std::vector<u64>> rel_orders;
    std::vector<Rational> rel_alpha;
    for (const auto& n : normals) {
      rel_orders.push_back(orders_modulo(g, n.mask()));
      rel_alpha.push_back(density(everything, rel_orders.back()));
    }

    std::size_t monotone_fail = 0, equality = 0, equality_fail = 0, propagation_fail = 0;
    std::optional<std::vector<Subgroup>> lattice;
    std::vector<std::vector<u64>> own_orders;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (!(a <= rel_alpha[i]))
        ++monotone_fail;
      if (a != rel_alpha[i])
        continue;
      ++equality;
      const auto& n = normals[i];
      const bool elab2 = std::all_of(n.members.begin(), n.members.end(),
                                     [&](Index x) { return g.element_order(x) <= 2; });
      if (!elab2)
        ++equality_fail;
      for (std::size_t j = 0; j < normals.size(); ++j)
        if (is_subset(normals[j], n) && rel_alpha[j] != a)
          ++propagation_fail;
      if (g.order() <= limits.lattice_limit) {
        if (!lattice)
          lattice = subgroup_lattice(g, limits);
        for (const auto& k : *lattice) {
          std::map<u64, u64> tally;
          for (Index x : k.members)
            ++tally[g.element_order(x)];
          Rational ak = 0;
          for (const auto& [o, cnt] : tally)
            ak += Rational(cnt) / euler_phi(o);
          ak /= k.order();
          if (ak != density(k.members, rel_orders[i]))
            ++propagation_fail;
        }
      }
    }
    r.add("quotients", label + " alpha(G) <= alpha(G/N) for all normal N", monotone_fail == 0,
          std::to_string(normals.size()) + " normal subgroups, " + std::to_string(monotone_fail) + " violations");
    r.add("quotients", label + " equality implies N elementary abelian 2", equality_fail == 0,
          std::to_string(equality) + " equality cases");
    r.add("quotients", label + " equality propagates to normal L <= N and subgroups K",
          propagation_fail == 0,
          std::string(lattice ? "with" : "without") + " subgroup lattice, " + std::to_string(propagation_fail) +
            " violations");
  }
  return r;
}

}  // namespace cycgroup
