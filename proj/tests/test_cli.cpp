#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "uqosp/cli/cli.hpp"

using namespace uqosp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::filesystem::path(UQOSP_GOLDEN_DIR) / name); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--alpha-sq", "x", "roots"}).code == 2);
    CHECK(run({"--alpha-sq", "1/2", "limit", "--n", "1"}).code == 2);
    CHECK(run({"roots", "--cutoff", "-1"}).code == 2);
    CHECK(run({"order", "--cutoff", "0"}).code == 2);
    CHECK(run({"cw", "build", "--ordering", "anticlockwise"}).code == 2);
    CHECK(run({"limit", "--expr", "q+"}).code == 2);
    CHECK(run({"verify", "prop1", "--family", "nope"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"limit", "--expr", "q+q^-1"}).code == 0);
    Run pole = run({"limit", "--expr", "1/(q-q^-1)"});
    CHECK(pole.code == 1);
    CHECK(pole.err.find("pole at q=1 in coordinate 1") != std::string::npos);
    Run short_bound = run({"verify", "prop1", "--n", "1", "--bound", "6", "--family", "plus-a"});
    CHECK(short_bound.code == 1);
    CHECK(short_bound.out.find("bound exceeded") != std::string::npos);
  }

  TEST_CASE("limit of an expression") {
    Run r = run({"limit", "--expr", "q+q^-1"});
    CHECK(r.out == "2\n");
    CHECK(run({"limit", "--expr", "s_a"}).out == "sqrt(2)\n");
  }

  TEST_CASE("golden outputs") {
    CHECK(run({"roots", "--cutoff", "2", "--reduced", "--json"}).out == golden("roots_cutoff2_reduced.json"));
    CHECK(run({"order", "--cutoff", "3"}).out == golden("order_cutoff3.txt"));
    CHECK(run({"schur", "--n", "3", "--json"}).out == golden("schur_n3.json"));
    CHECK(run({"classical", "--n", "1", "--degree", "1"}).out == golden("classical_n1.txt"));
  }

  TEST_CASE("deterministic output") {
    std::vector<std::string> args{"verify", "serre", "--bound", "6", "--json"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("JSON report shape") {
    Run r = run({"verify", "prop2", "--n", "1", "--m", "1", "--bound", "8", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "uqosp.report/1");
    CHECK(j["command"] == "verify prop2");
    CHECK(j["pass"] == true);
    CHECK(j["config"]["bound"] == 8);
    REQUIRE(j["checks"].size() == 1);
    CHECK(!j["checks"][0].contains("wall_time"));
    Run t = run({"verify", "prop2", "--n", "1", "--m", "1", "--bound", "8", "--json", "--timing"});
    auto jt = nlohmann::json::parse(t.out);
    CHECK(jt["checks"][0].contains("wall_time"));
  }

  TEST_CASE("report written to a file") {
    auto path = std::filesystem::temp_directory_path() / "uqosp_cli_test_report.json";
    std::filesystem::remove(path);
    Run r = run({"--out", path.string(), "--json", "roots", "--cutoff", "1"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["roots"].size() == 7);
    std::filesystem::remove(path);
  }

  TEST_CASE("cw build checks weights") {
    Run r = run({"cw", "build", "--cutoff", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}
