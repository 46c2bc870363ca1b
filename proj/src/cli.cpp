#include "cycgroup/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycgroup/analysis.hpp"
#include "cycgroup/structure.hpp"

namespace cycgroup::cli {

namespace {

struct Config {
  Limits limits;
  std::string format = "pretty";
  std::string out_path;
  unsigned jobs = 1;
};

Format parse_format(const std::string& f)
{
  if (f == "csv")
    return Format::csv;
  if (f == "json")
    return Format::json;
  return Format::pretty;
}

FiniteGroup load_group_file(const std::string& path, const Limits& limits)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  }
  catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  const std::string label = std::filesystem::path(path).filename().string();
  try {
    if (doc.contains("table")) {
      const std::size_t n = doc.at("order").get<std::size_t>();
      const auto& rows = doc.at("table");
      if (!rows.is_array() || rows.size() != n)
        throw InputError("table is not n x n");
      std::vector<Index> table;
      table.reserve(n * n);
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
          throw InputError("table is not n x n");
        for (const auto& v : row) {
          const long long x = v.get<long long>();
          if (x < 0 || static_cast<std::size_t>(x) >= n)
            throw InputError("table entry out of range (closure violated)");
          table.push_back(static_cast<Index>(x));
        }
      }
      return FiniteGroup::from_table(std::move(table), n, label);
    }
    if (doc.contains("generators")) {
      const std::size_t degree = doc.at("degree").get<std::size_t>();
      std::vector<Permutation> gens;
      for (const auto& text : doc.at("generators")) {
        try {
          gens.push_back(Permutation::from_cycles(text.get<std::string>(), degree));
        }
        catch (const InputError&) {
          throw;
        }
        catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }
      return FiniteGroup::close_generators(gens, degree, label, limits);
    }
  }
  catch (const nlohmann::json::exception& e) {
    throw InputError("malformed group document '" + path + "': " + e.what());
  }
  throw InputError("group document '" + path + "' needs either {order, table} or {degree, generators}");
}

FiniteGroup load_group(const std::string& input, const Limits& limits)
{
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec))
    return load_group_file(input, limits);
  return construct(input, limits);
}

std::string summary(const InvariantFingerprint& f, Format format)
{
  const Integer gap = f.order - f.c;
  switch (format) {
  case Format::json: {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(fingerprint_json(f));
    j["gap"] = gap.str();
    return j.dump() + "\n";
  }
  case Format::csv:
    return fingerprint_csv_header() + "\n" + fingerprint_csv(f) + "\n";
  case Format::pretty:
    break;
  }
  std::ostringstream out;
  out << "group          " << f.label << '\n'
      << "order          " << f.order << '\n'
      << "exponent       " << f.exponent << '\n'
      << "c              " << f.c << '\n'
      << "alpha          " << to_fraction_string(f.alpha) << "  (" << to_decimal_string(f.alpha) << ")\n"
      << "|G| - c        " << gap << '\n'
      << "abelian        " << (f.abelian ? "true" : "false") << '\n'
      << "nilpotent      " << (f.nilpotent ? "true" : "false") << '\n'
      << "solvable       " << (f.solvable ? "true" : "false") << '\n'
      << "supersolvable  " << (f.supersolvable ? (*f.supersolvable ? "true" : "false") : "not computed") << '\n';
  return out.str();
}

std::string invariants_text(const InvariantFingerprint& f, Format format)
{
  switch (format) {
  case Format::json: return fingerprint_json(f) + "\n";
  case Format::csv: return fingerprint_csv_header() + "\n" + fingerprint_csv(f) + "\n";
  case Format::pretty: return fingerprint_pretty(f);
  }
  return {};
}

std::string convergence_text(const std::string& label, const OrderSpectrum& s, unsigned n_max, Format format)
{
  const auto rows = convergence_report(s, n_max);
  std::ostringstream out;
  switch (format) {
  case Format::csv:
    out << "n,alpha_n,limit,gap\n";
    for (const auto& r : rows)
      out << r.n << ',' << to_fraction_string(r.alpha_n) << ',' << to_fraction_string(r.limit) << ','
          << to_fraction_string(r.gap) << '\n';
    break;
  case Format::json:
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["group"] = label;
      j["n"] = r.n;
      j["alpha_n"] = to_fraction_string(r.alpha_n);
      j["limit"] = to_fraction_string(r.limit);
      j["gap"] = to_fraction_string(r.gap);
      out << j.dump() << '\n';
    }
    break;
  case Format::pretty:
    out << "group " << label << ", exponent " << s.exponent() << ", limit " << to_fraction_string(power_limit(s))
        << ", decay rate " << to_fraction_string(decay_rate(s)) << '\n';
    out << "   n  alpha(G^n)      gap\n";
    for (const auto& r : rows) {
      std::string n = std::to_string(r.n);
      out << std::string(4 - std::min<std::size_t>(4, n.size()), ' ') << n << "  " << to_decimal_string(r.alpha_n, 12)
          << "  " << to_decimal_string(r.gap, 12) << '\n';
    }
    break;
  }
  return out.str();
}

std::string gaps_text(const std::vector<const CorpusEntry*>& hits, Format format)
{
  std::ostringstream out;
  switch (format) {
  case Format::csv:
    out << "label,order,c,alpha\n";
    for (const auto* e : hits) {
      std::string label = e->fingerprint.label;
      if (label.find(',') != std::string::npos)
        label = "\"" + label + "\"";
      out << label << ',' << e->fingerprint.order << ',' << e->fingerprint.c << ','
          << to_fraction_string(e->fingerprint.alpha) << '\n';
    }
    break;
  case Format::json:
    for (const auto* e : hits) {
      nlohmann::ordered_json j;
      j["label"] = e->fingerprint.label;
      j["order"] = e->fingerprint.order.str();
      j["c"] = e->fingerprint.c.str();
      j["alpha"] = to_fraction_string(e->fingerprint.alpha);
      out << j.dump() << '\n';
    }
    break;
  case Format::pretty:
    for (const auto* e : hits)
      out << e->fingerprint.label << "  order " << e->fingerprint.order << "  c " << e->fingerprint.c << '\n';
    out << hits.size() << " hit(s)\n";
    break;
  }
  return out.str();
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"table1",     "named",     "wall",         "modules",
                                              "formulas",   "inequalities", "cp-bounds", "quotients",
                                              "thresholds", "convergence",  "gaps",      "sym-quotient",
                                              "all"};
  return names;
}

bool needs_corpus(const std::string& suite)
{
  return suite == "formulas" || suite == "inequalities" || suite == "cp-bounds" || suite == "quotients" ||
         suite == "thresholds" || suite == "convergence" || suite == "gaps" || suite == "all";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Config cfg;
  CLI::App app{"Cyclic-subgroup density toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
  app.add_option("--jobs", cfg.jobs, "Worker threads for corpus work")->check(CLI::Range(1u, 256u));
  app.add_option("--table-limit", cfg.limits.table_limit, "Largest order with a materialized Cayley table")
    ->check(CLI::PositiveNumber);
  app.add_option("--lattice-limit", cfg.limits.lattice_limit, "Largest order for subgroup-lattice work")
    ->check(CLI::PositiveNumber);
  app.add_option("--normal-limit", cfg.limits.normal_enum_limit, "Largest order for normal-subgroup enumeration")
    ->check(CLI::PositiveNumber);
  app.add_option("--iso-limit", cfg.limits.iso_limit, "Largest order for isomorphism search")
    ->check(CLI::PositiveNumber);
  app.add_option("--cap", cfg.limits.size_cap, "Closure and product size cap")->check(CLI::PositiveNumber);

  std::string construct_spec;
  auto* construct_cmd = app.add_subcommand("construct", "Build a group from a spec string and summarize it");
  construct_cmd->add_option("spec", construct_spec, "Spec string, e.g. pgl2:9 or product:c2^3,sym:4")->required();

  std::string invariants_input;
  auto* invariants_cmd = app.add_subcommand("invariants", "Full invariant fingerprint of a spec string or JSON file");
  invariants_cmd->add_option("input", invariants_input, "Spec string or path to a table/generator JSON file")
    ->required();

  std::string suite = "all";
  unsigned verify_g = 9;
  std::string verify_group;
  unsigned verify_n = 30;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--g", verify_g, "Gap value for the gaps suite");
  verify_cmd->add_option("--group", verify_group, "Group for the convergence suite");
  verify_cmd->add_option("--n", verify_n, "Largest exponent for the convergence suite")->check(CLI::Range(1u, 10000u));

  std::string power_group;
  unsigned power_n = 30;
  auto* power_cmd = app.add_subcommand("power", "alpha(G^n) for n = 1..N from the spectrum of G");
  power_cmd->add_option("--group", power_group, "Spec string or JSON file")->required();
  power_cmd->add_option("--n", power_n, "Largest exponent")->check(CLI::Range(1u, 10000u));

  unsigned gaps_g = 9;
  std::size_t gaps_max_order = 0;
  auto* gaps_cmd = app.add_subcommand("gaps", "Corpus entries with |G| - c(G) = g");
  gaps_cmd->add_option("--g", gaps_g, "Gap value");
  gaps_cmd->add_option("--max-order", gaps_max_order, "Only entries of at most this order (0: no bound)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  }
  catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  }
  catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  const Format format = parse_format(cfg.format);
  std::string text;
  int code = success;

  try {
    if (*construct_cmd) {
      const FiniteGroup g = construct(construct_spec, cfg.limits);
      text = summary(fingerprint(g, cfg.limits), format);
    }
    else if (*invariants_cmd) {
      const FiniteGroup g = load_group(invariants_input, cfg.limits);
      text = invariants_text(fingerprint(g, cfg.limits), format);
    }
    else if (*power_cmd) {
      const FiniteGroup g = load_group(power_group, cfg.limits);
      text = convergence_text(g.label(), order_spectrum(g), power_n, format);
    }
    else if (*gaps_cmd) {
      const auto corpus = build_corpus(default_corpus_specs(), cfg.limits, cfg.jobs);
      std::vector<const CorpusEntry*> hits;
      for (const auto* e : gap_search(corpus, gaps_g))
        if (gaps_max_order == 0 || e->group.order() <= gaps_max_order)
          hits.push_back(e);
      text = gaps_text(hits, format);
    }
    else if (*verify_cmd) {
      Report report;
      std::vector<CorpusEntry> corpus;
      if (needs_corpus(suite))
        corpus = build_corpus(default_corpus_specs(), cfg.limits, cfg.jobs);
      const bool all = suite == "all";
      if (all || suite == "table1")
        report.merge(verify_table1(cfg.limits, cfg.jobs));
      if (all || suite == "named")
        report.merge(verify_named(cfg.limits));
      if (all || suite == "wall")
        report.merge(verify_wall(cfg.limits));
      if (all || suite == "modules")
        report.merge(verify_modules(cfg.limits));
      if (all || suite == "formulas")
        report.merge(verify_formulas(corpus));
      if (all || suite == "inequalities")
        report.merge(verify_inequalities(corpus));
      if (all || suite == "cp-bounds")
        report.merge(verify_cp_bounds(corpus, cfg.limits));
      if (all || suite == "quotients")
        report.merge(verify_quotients(corpus, cfg.limits));
      if (all || suite == "thresholds")
        report.merge(verify_thresholds(corpus, cfg.limits));
      if (suite == "convergence" && !verify_group.empty()) {
        const FiniteGroup g = load_group(verify_group, cfg.limits);
        const OrderSpectrum s = order_spectrum(g);
        const auto rows = convergence_report(s, verify_n);
        for (const auto& row : rows)
          report.add("convergence", g.label() + " n=" + std::to_string(row.n), true,
                     "alpha_n " + to_fraction_string(row.alpha_n) + " ~ " + to_decimal_string(row.alpha_n, 12) +
                       ", gap ~ " + to_decimal_string(row.gap, 12));
        report.add("convergence", g.label() + " limit 1/phi(exp G) = " + to_fraction_string(power_limit(s)), true,
                   "exponent " + std::to_string(s.exponent()) + ", decay rate " + to_fraction_string(decay_rate(s)));
        const Rational final_gap = rows.back().gap;
        report.add("convergence", g.label() + " final gap < 1/100", final_gap < make_rational(1, 100),
                   "gap(" + std::to_string(verify_n) + ") ~ " + to_decimal_string(final_gap, 12));
      }
      else if (all || suite == "convergence") {
        report.merge(verify_convergence(corpus, cfg.limits));
      }
      if (all || suite == "gaps") {
        if (suite == "gaps" && verify_g != 9) {
          for (const auto* e : gap_search(corpus, verify_g))
            report.add("gaps", "gap " + std::to_string(verify_g) + " hit " + e->fingerprint.label, true,
                       "order " + e->fingerprint.order.str() + ", c " + e->fingerprint.c.str());
        }
        else {
          report.merge(verify_gaps(corpus, cfg.limits));
        }
      }
      if (all || suite == "sym-quotient")
        report.merge(verify_sym_quotient(cfg.limits));
      text = render(report, format);
      if (!report.passed()) {
        code = assertion_failure;
        for (const auto& c : report.checks)
          if (!c.passed) {
            err << "first failure: " << c.suite << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                << '\n';
            break;
          }
      }
    }
  }
  catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return size_cap_exceeded;
  }
  catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }

  if (cfg.out_path.empty()) {
    out << text;
  }
  else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return input_error;
    }
    file << text;
  }
  return code;
}

}  // namespace cycgroup::cli
