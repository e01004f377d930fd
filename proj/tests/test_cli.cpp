#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "hopfbrauer/cli.hpp"

using nlohmann::json;

namespace {

const std::string kData = HOPFBRAUER_DATA_DIR;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::vector<const char*> argv{"hopfbrauer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hopfbrauer::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("indicators of H4 in characteristic 0") {
  const auto j = run_json({"indicators", "--sn", "4", "--char", "0"});
  CHECK(j["schema"] == 1);
  CHECK(j["metadata"]["composition"] == "right-to-left");
  CHECK(j["metadata"]["coproduct"] == "standard");
  CHECK(j["metadata"]["lifts"].is_array());
  CHECK(!j["metadata"]["lifts"].empty());
  REQUIRE(j["simples"].size() == 5);
  std::size_t squares = 0;
  for (const auto& rec : j["simples"]) {
    CHECK(rec["indicator"] == 1);
    CHECK(rec["self_dual"] == true);
    for (const char* key : {"orbit_rep", "stabilizer_order", "dim"}) CHECK(rec.contains(key));
    squares += rec["dim"].get<std::size_t>() * rec["dim"].get<std::size_t>();
  }
  CHECK(squares == 24);
}

TEST_CASE("chars records carry values keyed by pairs") {
  const auto j = run_json({"chars", "--sn", "3", "--char", "0"});
  REQUIRE(j["simples"].size() == 3);
  for (const auto& rec : j["simples"]) {
    CHECK(rec["values"].size() == 6);
    CHECK(rec["values"].contains("(();())"));
    CHECK(rec["trace_oracle"] == true);
  }
  const auto m = run_json({"chars", "--sn", "4", "--char", "3"});
  CHECK(m["characteristic"] == 3);
  for (const auto& rec : m["simples"]) CHECK(rec["indicator"] == 1);
}

TEST_CASE("hdecomp certificate") {
  const auto r = run({"hdecomp", "--sn", "5", "--p", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3^2") != std::string::npos);
  const auto j = run_json({"hdecomp", "--sn", "5", "--p", "3,5"});
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["cartan"]["certificate"] == "3^2");
  CHECK(j["results"][1]["cartan"]["certificate"] == "5^0");
  CHECK(j["results"][0]["paths_agree"] == true);
}

TEST_CASE("group files and csv") {
  const auto g = run_json({"group", "--group", kData + "/groups/s4.txt"});
  CHECK(g["orders"]["q"] == 24);
  CHECK(g["orbits"].is_array());
  const auto r = run({"decomp", "--sn", "4", "--of", "q", "--p", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# p=3 D\n1,0,0,0\n") != std::string::npos);
  const auto t = run({"chartable", "--sn", "4", "--of", "q", "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(t.out.starts_with("character,"));
  CHECK(run({"group", "--sn", "3", "--format", "csv"}).code == 2);
}

TEST_CASE("hopf-check and brauer") {
  const auto h = run_json({"hopf-check", "--sn", "4"});
  for (const auto& a : h["axioms"]) CHECK(a["pass"] == true);
  const auto b = run_json({"brauer", "--sn", "4", "--p", "3"});
  const auto& checks = b["results"][0]["checks"];
  CHECK(checks["formula_equals_trace"] == true);
  CHECK(checks["reduction_consistency"] == true);
  CHECK(checks["independence"]["rank"] == checks["independence"]["count"]);
}

TEST_CASE("thompson over corpora") {
  const auto j = run_json({"thompson"});
  CHECK(j["all_pass"] == true);
  CHECK(j["results"].size() == 9);
  const auto e = run({"thompson", "--corpus", kData + "/extended_corpus.json", "--p", "3"});
  CHECK(e.code == 0);
  CHECK(e.out.find("VACUOUS") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"indicators"}).code == 2);
  CHECK(run({"indicators", "--sn", "3", "--group", kData + "/groups/s4.txt"}).code == 2);
  CHECK(run({"indicators", "--sn", "1"}).code == 2);
  CHECK(run({"indicators", "--sn", "3", "--char", "2"}).code == 2);
  CHECK(run({"indicators", "--sn", "3", "--char", "x"}).code == 2);
  CHECK(run({"brauer", "--sn", "3", "--p", "2"}).code == 2);
  CHECK(run({"brauer", "--sn", "3"}).code == 2);
  CHECK(run({"indicators", "--sn", "3", "--format", "xml"}).code == 2);
  CHECK(run({"group", "--group", kData + "/missing.txt"}).code == 2);
  CHECK(run({"thompson", "--corpus", kData + "/missing.json"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("deterministic output and seed override") {
  const auto a = run({"selftest", "--format", "json"});
  const auto b = run({"selftest", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["metadata"]["seed"] == 0);
  setenv("HOPFBRAUER_SEED", "42", 1);
  const auto c = run({"selftest", "--format", "json", "--seed", "7"});
  unsetenv("HOPFBRAUER_SEED");
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["metadata"]["seed"] == 42);
  setenv("HOPFBRAUER_SEED", "abc", 1);
  CHECK(run({"selftest"}).code == 2);
  unsetenv("HOPFBRAUER_SEED");
}
