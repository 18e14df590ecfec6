#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "wog_cli/cli.hpp"

using wog::cli::ExitStatus;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = wog::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const char* file) { return wog::test::data_path(file); }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify reports and agrees with the oracle") {
  const auto r = run({"classify", data("d_bip.graph"), "--oracle"});
  CHECK(r.status == ExitStatus::kOk);
  CHECK(r.out.find("class: bipartite") != std::string::npos);
  CHECK(r.out.find("oracle: agree") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("json records carry the input hash and options") {
  const auto r = run({"unmixed", data("d_path.graph"), "--json"});
  REQUIRE(r.status == ExitStatus::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["tool"] == "wog");
  CHECK(j["verb"] == "unmixed");
  CHECK(j["status"] == 0);
  CHECK(j["result"]["unmixed"] == "no");
  CHECK(j["result"]["certificate"] == "{x2, y1, y2}");
  std::ifstream in(data("d_path.graph"));
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  char expected[40];
  std::snprintf(expected, sizeof expected, "fnv1a:%016llx",
                static_cast<unsigned long long>(wog::cli::fnv1a(text)));
  CHECK(j["input_hash"] == expected);
  CHECK(j["options"]["field"] == "f2");
}

TEST_CASE("fnv1a reference values") {
  CHECK(wog::cli::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(wog::cli::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("ideal output parses back") {
  const auto r = run({"polarize", data("d_path.graph")});
  REQUIRE(r.status == ExitStatus::kOk);
  const auto ideal =
      wog::parse_ideal(r.out, std::vector<std::string>{"x1_1", "x1_2", "x2_1", "x2_2", "x2_3", "y1_1", "y2_1"});
  CHECK(wog::test::sorted(wog::test::generator_strings(ideal)) ==
        wog::test::sorted({"x2_1*y2_1", "x1_1*x1_2*y1_1", "x1_1*x2_1*x2_2*x2_3"}));
  CHECK(r.out.rfind("# polarization, 3 generators\n", 0) == 0);
}

TEST_CASE("inline input with semicolons") {
  const auto r = run({"ideal", "vertex a 1;vertex b 2;edge a b"});
  CHECK(r.status == ExitStatus::kOk);
  CHECK(r.out == "# ideal, 1 generator\na*b\n");
  const auto raw = run({"ideal", "vertex a 1;vertex b 2;edge a b", "--raw-weights"});
  CHECK(raw.out.find("a*b^2") != std::string::npos);
}

TEST_CASE("expectation files") {
  CHECK(run({"classify", data("d_bip.graph"), "--oracle", "--expect", data("d_bip.expect")}).status == ExitStatus::kOk);
  const auto bad = run({"classify", data("d_bip.graph"), "--expect", data("d_bip_corrupted.expect")});
  CHECK(bad.status == ExitStatus::kPropertyViolation);
  CHECK(bad.err.find("cm") != std::string::npos);
  const auto missing_key = temp_file("wog_missing_key.expect", "nonsense = 1\n");
  CHECK(run({"unmixed", data("d_path.graph"), "--expect", missing_key}).status == ExitStatus::kPropertyViolation);
  const auto malformed = temp_file("wog_malformed.expect", "no equals sign\n");
  CHECK(run({"unmixed", data("d_path.graph"), "--expect", malformed}).status == ExitStatus::kInputError);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"classify", data("missing.graph")}).status == ExitStatus::kInputError);
  CHECK(run({"classify", "vertex a 1;edge a b"}).status == ExitStatus::kInputError);
  CHECK(run({}).status == ExitStatus::kInputError);
  CHECK(run({"frobnicate"}).status == ExitStatus::kInputError);
  CHECK(run({"assoc", data("d_path.graph"), "--method", "guess"}).status == ExitStatus::kInputError);
  CHECK(run({"classify", data("d_path.graph"), "--field", "f4"}).status == ExitStatus::kInputError);
  CHECK(run({"sweep", "--class", "cubic"}).status == ExitStatus::kInputError);
}

TEST_CASE("caps exit 3") {
  const auto r = run({"covers", data("d_bip.graph"), "--cap-vertices", "3"});
  CHECK(r.status == ExitStatus::kCapExceeded);
  CHECK(r.err.find("--cap-") != std::string::npos);
  CHECK(run({"oracle", data("d_bip.graph"), "--cap-faces", "4"}).status == ExitStatus::kCapExceeded);
}

TEST_CASE("help and version exit 0") {
  CHECK(run({"--help"}).status == ExitStatus::kOk);
  const auto v = run({"--version"});
  CHECK(v.status == ExitStatus::kOk);
  CHECK(v.out.find(WOG_TEST_VERSION) != std::string::npos);
}

TEST_CASE("verbs on the path fixture") {
  const auto p = data("d_path.graph");
  CHECK(run({"dual", p}).out.rfind("# dual, 8 generators", 0) == 0);
  CHECK(run({"covers", p}).out.find("count: 3") != std::string::npos);
  CHECK(run({"covers", p, "--strong"}).out.find("count: 5") != std::string::npos);
  for (const char* method : {"strong", "depolarization"}) {
    const auto r = run({"assoc", p, "--method", method});
    CHECK(r.status == ExitStatus::kOk);
    CHECK(r.out.find("count: 5") != std::string::npos);
  }
  CHECK(run({"unmixed", p, "--method", "heights"}).out.find("unmixed: no") != std::string::npos);
  const auto o = run({"oracle", p, "--field", "q"});
  CHECK(o.status == ExitStatus::kOk);
  CHECK(o.out.find("depth: 1") != std::string::npos);
  CHECK(o.out.find("dimension: 2") != std::string::npos);
  CHECK(run({"conjecture", p}).out.find("outcome: vacuous") != std::string::npos);
  CHECK(run({"scm", data("d_whiskered.graph")}).out.find("dual_linear_quotients: yes") != std::string::npos);
}

TEST_CASE("stdin input") {
  std::istringstream in("vertex a 1\nvertex b 1\nedge a b\n");
  auto* old = std::cin.rdbuf(in.rdbuf());
  const auto r = run({"ideal", "-"});
  std::cin.rdbuf(old);
  CHECK(r.status == ExitStatus::kOk);
  CHECK(r.out.find("a*b") != std::string::npos);
}

TEST_CASE("sweep writes one log line per instance") {
  const auto log = (std::filesystem::temp_directory_path() / "wog_sweep_test.jsonl").string();
  const auto r = run({"sweep", "--class", "whiskered", "--base-max", "2", "--oracle", "--log", log, "--json"});
  CHECK(r.status == ExitStatus::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["instances"] == 14);
  std::ifstream in(log);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line); ++lines) CHECK(nlohmann::json::parse(line).contains("graph"));
  CHECK(lines == 14);
  const auto b = run({"sweep", "--class", "random", "--count", "5", "--seed", "7", "--vertices-max", "5"});
  CHECK(b.status == ExitStatus::kOk);
}

}  // TEST_SUITE
