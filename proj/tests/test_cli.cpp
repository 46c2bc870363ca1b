#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cycgroup/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  Result r;
  r.code = cycgroup::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

std::string slurp(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("construct")
{
  const auto r = run({"construct", "pgl2:9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("720") != std::string::npos);
  CHECK(r.out.find("|G| - c") != std::string::npos);

  const auto j = run({"--format", "json", "construct", "product:c2^3,sym:4"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["order"] == 192);
  CHECK(doc["label"] == "product:c2^3,sym:4");

  const auto c = run({"--format", "csv", "construct", "sym:3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("sym:3,6,5,5/6") != std::string::npos);
}

TEST_CASE("exit codes")
{
  CHECK(run({"construct", "pgl2:10"}).code == 2);
  CHECK(run({"construct", "bogus"}).err.find("position") != std::string::npos);
  CHECK(run({"construct", "sym:9"}).code == 3);
  CHECK(run({"--cap", "100", "construct", "sym:5"}).code == 3);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"verify", "no-such-suite"}).code == 2);
  CHECK(run({"--format", "xml", "construct", "c2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("invariants from JSON documents")
{
  nlohmann::json table;
  table["order"] = 6;
  for (int i = 0; i < 6; ++i) {
    std::vector<int> row;
    for (int j = 0; j < 6; ++j)
      row.push_back((i + j) % 6);
    table["table"].push_back(row);
  }
  const auto good = temp_file("cycgroup_c6.json", table.dump());
  const auto r = run({"--format", "json", "invariants", good.string()});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["alpha"] == "2/3");
  CHECK(doc["c"] == 4);
  CHECK(doc["abelian"] == true);

  table["table"][1][2] = table["table"][1][3];
  const auto bad = temp_file("cycgroup_bad.json", table.dump());
  const auto b = run({"invariants", bad.string()});
  CHECK(b.code == 2);
  CHECK(b.err.find("not a Latin square row") != std::string::npos);

  const auto gens = temp_file("cycgroup_gens.json", R"json({"degree": 4, "generators": ["(0 1 2 3)", "(0 1)"]})json");
  const auto g = run({"--format", "json", "invariants", gens.string()});
  REQUIRE(g.code == 0);
  CHECK(nlohmann::json::parse(g.out)["order"] == 24);
  CHECK(nlohmann::json::parse(g.out)["c"] == 17);

  const auto garbage = temp_file("cycgroup_garbage.json", "{not json");
  CHECK(run({"invariants", garbage.string()}).code == 2);

  for (const auto& p : {good, bad, gens, garbage})
    std::filesystem::remove(p);
}

TEST_CASE("verify and power")
{
  const auto t = run({"verify", "table1"});
  CHECK(t.code == 0);
  CHECK(t.out.find("[FAIL]") == std::string::npos);

  const auto conv = run({"verify", "convergence", "--group", "sym:3", "--n", "30"});
  CHECK(conv.code == 0);
  CHECK(conv.out.find("final gap < 1/100") != std::string::npos);

  const auto slow = run({"verify", "convergence", "--group", "sym:3", "--n", "2"});
  CHECK(slow.code == 1);
  CHECK(slow.err.find("first failure:") != std::string::npos);

  const auto p = run({"--format", "csv", "power", "--group", "c3", "--n", "3"});
  CHECK(p.code == 0);
  CHECK(p.out.find("14/27") != std::string::npos);

  const auto gaps = run({"gaps", "--g", "9", "--max-order", "30"});
  CHECK(gaps.code == 0);
  CHECK(gaps.out.find("dihedral:22") != std::string::npos);
}

TEST_CASE("--out writes the report and --jobs does not change it")
{
  const auto path = std::filesystem::temp_directory_path() / "cycgroup_report.csv";
  const auto one = run({"--format", "csv", "--jobs", "1", "--out", path.string(), "verify", "formulas"});
  REQUIRE(one.code == 0);
  CHECK(one.out.empty());
  const std::string first = slurp(path);
  CHECK(first.rfind("suite,check,status,detail\n", 0) == 0);
  const auto two = run({"--format", "csv", "--jobs", "2", "--out", path.string(), "verify", "formulas"});
  REQUIRE(two.code == 0);
  CHECK(slurp(path) == first);
  std::filesystem::remove(path);
}
