#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "orbiknot/cli.hpp"

using namespace orbiknot;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), {"--fixtures", ORBIKNOT_FIXTURE_DIR});
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  INFO(r.err);
  REQUIRE(r.code == kExitOk);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("det and h1", "[cli]") {
  CHECK(run_json({"det", "trefoil.pd.json"}) == nlohmann::json{{"det", 3}});
  CHECK(run_json({"det", "11a201.pd.json"}).at("det") == 81);
  auto h1 = run_json({"h1", "granny.pd.json"});
  CHECK(h1.dump().find("3") != std::string::npos);
}

TEST_CASE("csv output", "[cli]") {
  auto r = run({"--format", "csv", "det", "trefoil.pd.json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "det\n3\n");
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({"det", "no_such_file.pd.json"}).code == kExitDomainError);
  CHECK(run({"frobnicate"}).code == kExitDomainError);
  CHECK(run({"montesinos", "det", "1/0"}).code == kExitDomainError);
  CHECK(run({"--budget", "10", "hom", "11a201.pd.json", "--target", "A5"}).code == kExitBudgetError);
  CHECK(run({"triangle", "classify", "2", "3", "7"}).code == kExitOk);
}

TEST_CASE("every subcommand emits parseable JSON", "[cli]") {
  std::vector<std::vector<std::string>> commands{
      {"color", "trefoil.pd.json", "-n", "3", "--witness"},
      {"hom", "trefoil.pd.json", "--target", "D6", "--orbifold"},
      {"hom", "trefoil.pd.json", "--target", "S3", "--count"},
      {"evidence", "trefoil.pd.json", "figure_eight.pd.json"},
      {"montesinos", "det", "1/3,2/3,4/5"},
      {"montesinos", "normalize", "4/3,1/2,1/2"},
      {"montesinos", "equiv", "1/3,2/3,4/5", "4/5,2/3,1/3"},
      {"montesinos", "filter", "1/3,2/3,4/5", "--candidate", "twobridge:9/7"},
      {"triangle", "obstruct", "2", "3", "7", "--", "2", "3", "11"},
      {"minimal", "torus", "3", "5"},
      {"minimal", "montesinos", "1/2,1/3,1/7"},
      {"symunion", "report", "6_1.pd.json"},
  };
  for (auto const &c : commands) {
    INFO(c[0]);
    auto j = run_json(c);
    CHECK(nlohmann::json::parse(j.dump(2)) == j);
  }
}

TEST_CASE("subcommand results", "[cli]") {
  auto hom = run_json({"hom", "trefoil.pd.json", "--target", "D6", "--orbifold", "--count"});
  CHECK(hom.at("homs") == 10);
  CHECK(hom.at("epis") == 6);
  CHECK(run_json({"evidence", "trefoil.pd.json", "figure_eight.pd.json"}).at("witness") == "D10");
  CHECK(run_json({"montesinos", "det", "1/3,2/3,4/5"}).at("det") == 81);
  CHECK(run_json({"triangle", "obstruct", "2", "3", "7", "--", "2", "3", "11"}).dump().find("ExcludedByChi") !=
        std::string::npos);
  auto rep = run_json({"symunion", "report", "6_1.pd.json"});
  REQUIRE(rep.at("candidates").size() == 1);
  CHECK(rep.at("candidates")[0].at("class") == nlohmann::json{{"kind", "twobridge"}, {"p", 3}, {"q", 1}});
  CHECK(rep.at("candidates")[0].at("survives") == true);
}

TEST_CASE("outputs are deterministic", "[cli]") {
  std::vector<std::string> hom{"hom", "6_1.pd.json", "--target", "D6", "--orbifold", "--threads"};
  auto base = run([&] { auto a = hom; a.push_back("1"); return a; }());
  for (auto t : {"2", "8"}) {
    auto a = hom;
    a.push_back(t);
    CHECK(run(a).out == base.out);
  }
  CHECK(run({"symunion", "report", "11a201.pd.json"}).out == run({"symunion", "report", "11a201.pd.json"}).out);
}

TEST_CASE("poset export", "[cli]") {
  auto path = std::filesystem::temp_directory_path() / "orbiknot_cli_poset.dot";
  auto j = run_json({"poset", "--alpha-max", "4", "--r-max", "3", "--out", path.string()});
  // Multisets of three fractions from {1/4,1/3,1/2,2/3,3/4}.
  CHECK(j.at("nodes") == 35);
  std::ifstream in(path);
  std::string dot((std::istreambuf_iterator<char>(in)), {});
  CHECK(dot.rfind("digraph", 0) == 0);
  std::filesystem::remove(path);
}
