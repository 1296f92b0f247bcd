#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "seg/cli.hpp"
#include "seg/io.hpp"
#include "support.hpp"

using namespace seg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json as_json(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "seg_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify") {
  Run r = run({"classify", "RT(0,1,1)"});
  CHECK(r.code == cli::kPositive);
  CHECK(r.out.find("OddCaterpillar, not SEG (non-existence lemma)") != std::string::npos);
  r = run({"classify", "RT(0^4,2,6)"});
  CHECK(r.out.find("EvenCaterpillar, constructive") != std::string::npos);

  r = run({"classify", "RT(2,3^2,5)", "--format", "json"});
  const auto j = as_json(r);
  CHECK(j["family"] == "OddLobster");
  CHECK(j["dispatch"]["tag"] == "L-j-even,k,l-odd");
  CHECK(j["dispatch"]["case"] == 2);
  CHECK(j["q"] == 17);

  CHECK(run({"classify", "RT(1,"}).code == cli::kUsage);
  CHECK(run({"classify"}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"classify", "RT(1,1)", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kPositive);
}

TEST_CASE("label exit codes") {
  const auto path = scratch("label.json");
  Run r = run({"label", "RT(0^4,2,6)", "--out", path.string(), "--format", "json"});
  CHECK(r.code == cli::kPositive);
  CHECK(as_json(r)["edges"]["v6.6"] == -7);
  CHECK(verify_document(load_labeling_file(path.string())).is_seg);

  CHECK(run({"label", "RT(0,1,1)"}).code == cli::kNegative);
  CHECK(run({"label", "RT(2,1,1)"}).code == cli::kUndecided);
  CHECK(run({"label", "RT(0,2,2,2,2)"}).code == cli::kUndecided);
  CHECK(run({"label", "RT(2,1,1)", "--search-budget", "10^6"}).code == cli::kPositive);
  CHECK(run({"label", "RT(0,2,2,2,2)", "--search-budget", "2"}).code == cli::kUndecided);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", testing::golden_path("fig_0p4_2_6.json")}).code == cli::kPositive);

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"j({"spec": "RT(1,1)", "edges": {"v1": 1, "v2": -1, "v1.1": 2, "v2.1": -2}})j";
  Run r = run({"verify", bad.string(), "--format", "json"});
  CHECK(r.code == cli::kNegative);
  CHECK(as_json(r)["is_seg"] == false);

  const auto extra = scratch("extra.json");
  std::ofstream(extra) << R"j({"spec": "RT(1,1)", "edges": {"v1": -1, "v2": 1, "v1.1": 2, "v2.1": -2, "v9": 3}})j";
  CHECK(run({"verify", extra.string()}).code == cli::kNegative);

  const auto broken = scratch("broken.json");
  std::ofstream(broken) << "{ not json";
  CHECK(run({"verify", broken.string()}).code == cli::kUsage);
  CHECK(run({"verify", scratch("missing.json").string() + ".nope"}).code == cli::kUsage);
}

TEST_CASE("search writes certificates for negative answers") {
  const auto dir = scratch("certs");
  std::filesystem::remove_all(dir);
  Run r = run({"search", "RT(0^3,1,1)", "--certificates-dir", dir.string()});
  CHECK(r.code == cli::kNegative);
  CHECK(r.out.find("none, certificate written") != std::string::npos);
  const auto cert = dir / "RT_0^3_1^2.json";
  REQUIRE(std::filesystem::exists(cert));
  const Certificate c = read_certificate(read_text_file(cert.string()));
  CHECK(c.outcome == "none");
  CHECK(c.edges == 7);

  r = run({"search", "RT(2,1)", "--count", "--format", "json"});
  CHECK(r.code == cli::kPositive);
  CHECK(as_json(r)["count"] == 8);

  CHECK(run({"search", "RT(0^3,1^3)", "--search-budget", "5"}).code == cli::kUndecided);
  CHECK(run({"search", "RT(0,11,12)"}).code == cli::kUsage);
  CHECK(run({"search", "RT(1,1)", "--search-budget", "abc"}).code == cli::kUsage);
  CHECK(run({"search", "RT(1,1)", "--no-break-negation", "--no-break-leaves", "--no-break-spine", "--workers", "2"})
            .code == cli::kPositive);
}

TEST_CASE("json output is stable across runs") {
  const std::vector<std::string> args{"search", "RT(0,1,1,1,3)", "--format", "json", "--workers", "4"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("survey") {
  Run r = run({"survey", "--max-size", "8", "--format", "json"});
  CHECK(r.code == cli::kPositive);
  const auto j = as_json(r);
  CHECK(j["disagreements"] == 0);
  CHECK(j["rows"].size() == enumerate_specs(8).size());
  CHECK(run({"survey", "--max-size", "2"}).code == cli::kUsage);
}

TEST_CASE("export") {
  Run r = run({"export", "RT(1,1)", "--dot"});
  CHECK(r.code == cli::kPositive);
  CHECK(r.out.rfind("// spec: RT(1^2)", 0) == 0);
  r = run({"export", testing::golden_path("fig_0p3_2_4.json")});
  CHECK(r.code == cli::kPositive);
  CHECK(r.out.find("v0 -- v4 [label=\"0\"]") != std::string::npos);
}

TEST_CASE("budget parsing") {
  CHECK(cli::parse_budget("12345") == 12345);
  CHECK(cli::parse_budget("10^7") == 10'000'000);
  CHECK_THROWS(cli::parse_budget("10^"));
  CHECK_THROWS(cli::parse_budget("-1"));
  CHECK_THROWS(cli::parse_budget("10^30"));
}

}  // TEST_SUITE
