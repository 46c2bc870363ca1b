#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycgroup/constructions.hpp"
#include "cycgroup/invariants.hpp"

namespace cycgroup {

struct CorpusEntry {
  ConstructionSpec spec;
  FiniteGroup group;
  InvariantFingerprint fingerprint;
  OrderSpectrum spectrum;
};

/// The built-in verification corpus: every extremal witness plus a broad spread of small groups.
std::vector<std::string> default_corpus_specs();

CorpusEntry make_entry(const std::string& spec, const Limits& limits = {});

/// Builds the entries on up to `jobs` threads; the result is sorted by label.
std::vector<CorpusEntry> build_corpus(const std::vector<std::string>& specs, const Limits& limits = {},
                                      unsigned jobs = 1);

// Powers G^n from the spectrum of G alone.

/// Spectrum of G^n, recovered from B_{G^n}(l) = B_G(l)^n on the divisors of exp(G).
OrderSpectrum power_spectrum(const OrderSpectrum& s, unsigned n);
/// Spectrum of A x B.
OrderSpectrum product_spectrum(const OrderSpectrum& a, const OrderSpectrum& b);
Rational alpha_power(const OrderSpectrum& s, unsigned n);
/// 1 / phi(exp G)
Rational power_limit(const OrderSpectrum& s);
/// max over primes p | exp G of B_G(exp G / p) / |G|.
Rational decay_rate(const OrderSpectrum& s);

struct ConvergenceRow {
  unsigned n = 0;
  Rational alpha_n;
  Rational limit;
  Rational gap;
};

std::vector<ConvergenceRow> convergence_report(const OrderSpectrum& s, unsigned n_max);

/// α(G/N) from orders modulo N, without building the quotient:
/// (1/|K|) Σ_{x in K} 1/φ(least m with x^m in N), K the whole group or a subgroup.
Rational relative_alpha(const FiniteGroup& g, const std::vector<Index>& elements, const Subgroup& n);

struct Table1Row {
  std::string name;
  std::string spec;
  Integer order;
  Rational alpha;
};

/// Golden rows from the checked-in CSV (columns name,spec,order,alpha).
std::vector<Table1Row> load_table1(const std::string& path);
std::string default_table1_path();

struct Table1Result {
  Table1Row expected;
  Integer order;
  Rational alpha;
  bool matches() const { return order == expected.order && alpha == expected.alpha; }
};

/// Rebuilds every golden row, keeping the golden row order.
std::vector<Table1Result> table1_report(const std::vector<Table1Row>& golden, const Limits& limits = {},
                                        unsigned jobs = 1);

/// Entries with |G| - c(G) = g.
std::vector<const CorpusEntry*> gap_search(const std::vector<CorpusEntry>& corpus, const Integer& g);

// Verification reports.

struct Check {
  std::string suite;
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string suite, std::string name, bool passed, std::string detail = {});
  void merge(const Report& other);
  bool passed() const;
  std::size_t failures() const;
};

enum class Format { csv, json, pretty };

std::string render(const Report& report, Format format);

Report verify_table1(const Limits& limits = {}, unsigned jobs = 1);
/// The four wall families: α formulas and the element counts behind them.
Report verify_wall(const Limits& limits = {});
/// Element counts and c(X) of the fully deleted module and C4-module groups.
Report verify_modules(const Limits& limits = {});
Report verify_thresholds(const std::vector<CorpusEntry>& corpus, const Limits& limits = {});
Report verify_convergence(const std::vector<CorpusEntry>& corpus, const Limits& limits = {});
Report verify_gaps(const std::vector<CorpusEntry>& corpus, const Limits& limits = {});
Report verify_cp_bounds(const std::vector<CorpusEntry>& corpus, const Limits& limits = {});
Report verify_sym_quotient(const Limits& limits = {});
/// c_direct = c_moebius = c_nilpotent, l | B(l), and the product identities.
Report verify_formulas(const std::vector<CorpusEntry>& corpus);
/// Involution and commuting-probability inequalities.
Report verify_inequalities(const std::vector<CorpusEntry>& corpus);
/// α(G) <= α(G/N) with its equality case and propagation.
Report verify_quotients(const std::vector<CorpusEntry>& corpus, const Limits& limits = {});

/// The named α values of small groups.
Report verify_named(const Limits& limits = {});

}  // namespace cycgroup
