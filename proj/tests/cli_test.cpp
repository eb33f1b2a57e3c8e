#include "lupi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "lupi/profile_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lupi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "lupi_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path path = scratch(name);
  std::ofstream(path) << text;
  return path;
}

const char* kAsymmetric3 = R"({"n": 3, "strategies": [[0, 0, 1], [0.5, 0.5, 0], [0.5, 0.5, 0]],
  "labels": ["Alice", "Bob", "Charles"]})";
const char* kAsymmetric4 =
    R"({"n": 4, "strategies": [[0, 0, 1, 0], [0.5, 0.5, 0, 0], [0.5, 0.5, 0, 0], [0.5, 0.5, 0, 0]]})";

}  // namespace

TEST_CASE("solve prints the n = 3 equilibrium") {
  const Run r = run({"solve", "--n", "3", "--model", "paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.464101615 0.267949192 0.267949192") != std::string::npos);
  CHECK(r.out.find("payoff:     0.287187079") != std::string::npos);
}

TEST_CASE("solve json and csv") {
  const Run j = run({"solve", "--n", "4", "--format", "json"});
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["converged"] == true);
  CHECK(std::abs(doc["strategy"][0].get<double>() - 0.488) < 0.0005);
  CHECK(std::abs(doc["payoff"].get<double>() - 0.134) < 0.0005);

  const Run c = run({"solve", "--n", "3", "--model", "exact", "--format", "csv"});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("model,n,converged,payoff,residual_norm,iterations,starts,interior,p1,p2,p3\n",
                    0) == 0);
  CHECK(c.out.find("exact,3,true,0.28718707") != std::string::npos);
}

TEST_CASE("solve --all-roots lists each distinct root") {
  const Run r = run({"solve", "--n", "4", "--model", "exact", "--all-roots", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["roots"].size() == 1);
}

TEST_CASE("solve usage errors") {
  CHECK(run({"solve", "--n", "2", "--model", "paper"}).code == 1);
  CHECK(run({"solve", "--n", "13"}).code == 1);
  CHECK(run({"solve", "--n", "3", "--model", "other"}).code == 1);
  CHECK(run({"solve"}).code == 1);
  CHECK(run({"solve", "--n", "3", "--format", "yaml"}).code == 1);
  CHECK(run({}).code == 1);
  const Run r = run({"solve", "--n", "2"});
  CHECK(r.err.find("--n must lie in [3, 12]") != std::string::npos);
}

TEST_CASE("solve exit status 3 without convergence") {
  const Run r = run({"solve", "--n", "5", "--max-iter", "0"});
  CHECK(r.code == 3);
  CHECK(r.err.find("did not converge") != std::string::npos);
}

TEST_CASE("table reproduces the comparison rows") {
  const Run r = run({"table", "--max-n", "8", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "source,3,4,5,6,7,8\n"
        "approx,0.281,0.133,0.0645,0.0317,0.0157,0.00784\n"
        "reference,0.25,0.125,0.0625,0.0313,0.0156,0.00781\n"
        "exact,0.287,0.134,,,,\n");
  const Run four = run({"table", "--max-n", "4", "--format", "json"});
  const json doc = json::parse(four.out);
  CHECK(doc["rows"]["exact"]["rounded"] == json({"0.287", "0.134"}));
  CHECK(run({"table", "--max-n", "2"}).code == 1);
  CHECK(run({"table"}).out.find("0.00784") != std::string::npos);
}

TEST_CASE("verify exit statuses follow the verdict") {
  const fs::path a4 = write_file("a4.json", kAsymmetric4);
  const Run ok = run({"verify", "--profile", a4.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verdict: Nash equilibrium (weak)") != std::string::npos);
  CHECK(ok.out.find("payoff sum: 1.000000000 (maximal") != std::string::npos);

  const fs::path a3 = write_file("a3.json", kAsymmetric3);
  const Run bad = run({"verify", "--profile", a3.string(), "--format", "json"});
  CHECK(bad.code == 2);
  const json doc = json::parse(bad.out);
  CHECK(doc["players"][0]["payoff"].get<double>() == doctest::Approx(0.5));
  CHECK(doc["players"][1]["label"] == "Bob");
  CHECK(doc["players"][1]["best_response_value"].get<double>() == doctest::Approx(0.5));
  CHECK(doc["players"][1]["best_choices"] == json({1}));
  CHECK(doc["is_payoff_sum_maximal"] == true);

  const Run text = run({"verify", "--profile", a3.string()});
  CHECK(text.out.find("not a Nash equilibrium; Bob gains 0.250000000 by switching to choice 1") !=
        std::string::npos);
}

TEST_CASE("verify reports malformed documents with exit 1") {
  const fs::path broken = write_file("broken.json", R"({"n": 2, "strategies": [[1, 0], [0.7, 0.7]]})");
  const Run r = run({"verify", "--profile", broken.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("row 2") != std::string::npos);
  CHECK(run({"verify", "--profile", scratch("missing.json").string()}).code == 1);
}

TEST_CASE("payoff command") {
  const fs::path a3 = write_file("a3.json", kAsymmetric3);
  const Run r = run({"payoff", "--profile", a3.string(), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "player,label,payoff\n1,Alice,0.5\n2,Bob,0.25\n3,Charles,0.25\n");
}

TEST_CASE("best-response command") {
  const Run r = run({"best-response", "--n", "3", "--others", "0.5,0.5,0", "0.5,0.5,0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("choice 3: 0.500000000") != std::string::npos);
  CHECK(r.out.find("best choices: 3") != std::string::npos);
  const Run j = run({"best-response", "--n", "3", "--others", "0.5,0.5,0", "0.5,0.5,0",
                     "--format", "json"});
  CHECK(json::parse(j.out)["values"] == json({0.25, 0.25, 0.5}));
  CHECK(run({"best-response", "--n", "3", "--others", "0.5,0.5,0"}).code == 1);
  CHECK(run({"best-response", "--n", "3", "--others", "0.5,x,0", "0.5,0.5,0"}).code == 1);
  CHECK(run({"best-response", "--n", "3", "--others", "0.5,0.6,0", "0.5,0.5,0"}).code == 1);
}

TEST_CASE("approx command") {
  const Run r = run({"approx", "--n", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("strategy:  0.5 0.25 0.25") != std::string::npos);
  CHECK(r.out.find("payoff:    0.28125") != std::string::npos);
  CHECK(run({"approx", "--n", "2"}).code == 1);
}

TEST_CASE("simulate is deterministic for a seed") {
  const fs::path a3 = write_file("a3.json", kAsymmetric3);
  const std::vector<std::string> args{"simulate", "--profile", a3.string(), "--rounds", "200000",
                                      "--seed", "42", "--format", "json"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json doc = json::parse(a.out);
  CHECK(doc["seed"] == 42);
  CHECK(doc["rounds"] == 200000);
  CHECK(run({"simulate", "--profile", a3.string(), "--rounds", "0"}).code == 1);
}

TEST_CASE("profiles written by the tool are accepted unchanged") {
  const fs::path solved = scratch("solved.json");
  const fs::path approx = scratch("approx.json");
  REQUIRE(run({"solve", "--n", "4", "--model", "exact", "--profile-out", solved.string()}).code == 0);
  REQUIRE(run({"approx", "--n", "5", "--profile-out", approx.string()}).code == 0);
  for (const auto& path : {solved, approx}) {
    const auto doc = lupi::read_profile_document(path.string());
    std::stringstream raw;
    raw << std::ifstream(path).rdbuf();
    CHECK(lupi::to_json_text(doc) == raw.str());
    CHECK(run({"payoff", "--profile", path.string()}).code == 0);
    CHECK(run({"simulate", "--profile", path.string(), "--rounds", "1000"}).code == 0);
  }
  CHECK(run({"verify", "--profile", solved.string()}).code == 0);
  // The geometric strategy is not an exact equilibrium.
  CHECK(run({"verify", "--profile", approx.string()}).code == 2);
}
