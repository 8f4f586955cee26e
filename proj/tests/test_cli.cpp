#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hwrbench/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hwrbench");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hwrbench::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("hwrbench_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("score verb") {
  auto r = run({"score", "--game", "alien", "--score", "9491.7", "--frames", "2e8", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["hns"].get<double>() == doctest::Approx(1.3426).epsilon(1e-4));
  CHECK(j["frames"] == 200000000);
  CHECK(j["hwrb"] == false);

  r = run({"score", "--game", "alien", "--score", "9491.7", "--frames", "2e8"});
  CHECK(r.out.find("134.26%") != std::string::npos);
  CHECK(r.out.find("3.68%") != std::string::npos);

  r = run({"score", "--game", "boxing", "--score", "100", "--frames", "2e8"});
  CHECK(r.out.find("832.50%") != std::string::npos);
  CHECK(r.out.find("100.00%") != std::string::npos);
  CHECK(r.out.find("true") != std::string::npos);

  j = nlohmann::json::parse(run({"score", "--game", "pong", "--score", "-20.7", "--format", "json"}).out);
  for (const auto* k : {"hns", "chns", "hwrns", "saber"}) CHECK(j[k].get<double>() == 0.0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"score", "--game", "alien"}).code == 2);
  CHECK(run({"score", "--game", "alien", "--score", "1", "--bogus"}).code == 2);
  CHECK(run({"score", "--game", "alien", "--score", "1", "--frames", "2.5"}).code == 2);
  CHECK(run({"score", "--game", "alien", "--score", "1", "--cap-mode", "loose"}).code == 2);
  CHECK(run({"compare", "--algorithm", "Rainbow"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto r = run({"score", "--game", "pacman", "--score", "1"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err)["error"] == "data");
  CHECK(run({"validate", "--baselines", "/nonexistent.csv"}).code == 1);
}

TEST_CASE("validate, aggregate and report on bundled data") {
  auto r = run({"validate"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);

  r = run({"aggregate", "--algorithm", "Rainbow", "--format", "json", "--cap-mode", "table-compat"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["aggregates"]["Rainbow"]["hns"]["mean"].get<double>() == doctest::Approx(8.7397).epsilon(1e-4));
  CHECK(j["aggregates"]["Rainbow"]["hwrns"]["hwrb"] == 4);

  r = run({"report", "--dataset", HWRBENCH_DATA_DIR "/datasets/sota-200m-model-free.csv", "--metric", "hwrns"});
  CHECK(r.code == 0);
  CHECK(r.out.find("HWRB") != std::string::npos);
  CHECK(run({"report", "--metric", "hwrns"}).out == run({"report", "--metric", "hwrns"}).out);

  r = run({"report", "--figure", "hwrb-vs-gametime"});
  CHECK(r.out.find("hwrb,SimPLe,") != std::string::npos);
  CHECK(run({"report", "--figure", "histogram"}).code == 2);
  CHECK(run({"report", "--algorithm", "Nobody"}).code == 1);
}

TEST_CASE("compare verb") {
  const auto r = run({"compare", "--algorithm", "Rainbow", "--algorithm", "GDI-H3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto wins_a = j["summary"]["wins"]["Rainbow"].get<int>();
  const auto wins_b = j["summary"]["wins"]["GDI-H3"].get<int>();
  CHECK(wins_a + wins_b + j["summary"]["ties"].get<int>() == 57);
  CHECK(wins_b > wins_a);
}

TEST_CASE("protocol-check verb") {
  const auto log = temp_file("ok.log", "action_set 18\nrepeat 100 1 3 0 4\n0 0 1 4\n");
  auto r = run({"protocol-check", "--log", log.string(), "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["conforming"] == true);

  r = run({"protocol-check", "--log", log.string(), "--budget", "100", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["violations"][0]["code"] == "budget exceeded");

  CHECK(run({"protocol-check"}).code == 2);
  CHECK(run({"protocol-check", "--log", "/nonexistent.log"}).code == 1);
  const auto bad = temp_file("bad.log", "1 2 3\n");
  CHECK(run({"protocol-check", "--log", bad.string()}).code == 1);
}

TEST_CASE("reproduce verb is repeatable and writes its log") {
  const auto log_path = std::filesystem::temp_directory_path() / "hwrbench_test_mismatch.json";
  const auto a = run({"reproduce", "--mismatch-log", log_path.string(), "--cap-mode", "spec-floor"});
  CHECK(a.code == 0);
  CHECK(a.err.find("table-compat") != std::string::npos);
  const auto b = run({"reproduce"});
  CHECK(a.out == b.out);
  std::ifstream in(log_path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["summary"]["cell_match_rate"].get<double>() >= 0.95);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "hwrbench_test_out.txt";
  const auto r = run({"score", "--game", "alien", "--score", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("alien") != std::string::npos);
}

TEST_CASE("environment overrides mirror flags") {
  ::setenv("HWRBENCH_FORMAT", "json", 1);
  const auto r = run({"score", "--game", "alien", "--score", "1"});
  ::unsetenv("HWRBENCH_FORMAT");
  CHECK(nlohmann::json::parse(r.out)["game"] == "alien");
}
