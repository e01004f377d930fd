#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/thompson.hpp"

using namespace hopfbrauer;

namespace {

const std::string kData = HOPFBRAUER_DATA_DIR;

std::shared_ptr<const Bismash> bismash(const CorpusMember& m) { return std::make_shared<const Bismash>(m.fg); }

}  // namespace

TEST_CASE("shipped corpus matches the built-in family") {
  const auto file = load_corpus(kData + "/corpus.json");
  const auto builtin = default_corpus();
  REQUIRE(file.size() == builtin.size());
  for (std::size_t i = 0; i < file.size(); ++i) {
    CHECK(file[i].name == builtin[i].name);
    CHECK(file[i].primes == builtin[i].primes);
    const auto& a = *file[i].fg;
    const auto& b = *builtin[i].fg;
    CHECK(a.q().elements() == b.q().elements());
    CHECK(a.f().elements() == b.f().elements());
    CHECK(a.g().elements() == b.g().elements());
  }
}

TEST_CASE("lifting theorem and orthogonality descent on the family") {
  for (const auto& m : default_corpus()) {
    const auto h = bismash(m);
    for (unsigned p : m.primes) {
      INFO(m.name << " p = " << p);
      const auto a = analyze(h, p);
      for (int nu : a.ord_indicators) CHECK(nu == 1);
      for (int nu : a.mod_indicators) CHECK(nu == 1);
      const auto lift = verify_thompson(a);
      CHECK(lift.pass());
      CHECK(lift.cartan_det_odd);
      CHECK(lift.entries.size() == a.mod.modules.size());
      for (const auto& e : lift.entries) {
        CHECK(!e.lifts.empty());
        for (int nu : e.lift_indicators) CHECK(nu == e.modular_indicator);
      }
      const auto orth = verify_orth_descent(a);
      for (auto v : orth.clauses) CHECK(v == Verdict::Pass);
      CHECK(orth.pass());
    }
  }
}

TEST_CASE("semisimple reduction lifts each simple to itself") {
  const auto h = bismash(default_corpus()[0]);
  for (unsigned p : {5u, 7u}) {
    const auto a = analyze(h, p);
    const auto lift = verify_thompson(a);
    REQUIRE(lift.entries.size() == a.ord.modules.size());
    for (std::size_t j = 0; j < lift.entries.size(); ++j) {
      CHECK(lift.entries[j].lifts == std::vector<std::size_t>{j});
      CHECK(a.dec.d[j][j] == 1);
    }
  }
}

TEST_CASE("extended corpus") {
  for (const auto& m : load_corpus(kData + "/extended_corpus.json")) {
    const auto h = bismash(m);
    for (unsigned p : m.primes) {
      INFO(m.name << " p = " << p);
      const auto a = analyze(h, p);
      CHECK(a.dec.paths_agree);
      CHECK(a.dec.block_diagonal);
      CHECK(a.dec.cartan.is_p_power);
      CHECK(verify_thompson(a).pass());
      const auto orth = verify_orth_descent(a);
      CHECK(orth.pass());
      for (std::size_t i = 0; i < a.ord_indicators.size(); ++i) CHECK((a.ord_indicators[i] != 0) == a.ord_self_dual[i]);
      for (std::size_t j = 0; j < a.mod_indicators.size(); ++j) CHECK((a.mod_indicators[j] != 0) == a.mod_self_dual[j]);
      if (m.name.starts_with("C3")) {
        CHECK(orth.clauses[0] == Verdict::Vacuous);
        CHECK(orth.clauses[1] == Verdict::Pass);
        CHECK(orth.clauses[2] == Verdict::Vacuous);
      }
    }
  }
}

TEST_CASE("corpus parsing errors") {
  using nlohmann::json;
  CHECK_THROWS_AS(parse_corpus(json::parse(R"j({"members": [{"sn": 3}], "primes": [2]})j")), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(json::parse(R"j({"members": [{"sn": 3}], "primes": [9]})j")), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(json::parse(R"j({"schema": 2, "members": []})j")), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(json::parse(R"j({"members": [{"q": ["(1 2)"], "f": ["()"]}]})j")), InvalidArgument);
  CHECK_THROWS_AS(parse_corpus(json::parse(R"j([1, 2])j")), InvalidArgument);
  CHECK_THROWS_AS(load_corpus(kData + "/missing.json"), InvalidArgument);
  const auto c = parse_corpus(json::parse(R"j({"members": [{"sn": 4, "primes": [5]}]})j"));
  REQUIRE(c.size() == 1);
  CHECK(c[0].name == "S4");
  CHECK(c[0].primes == std::vector<unsigned>{5});
}

TEST_CASE("p = 2 is rejected") {
  const auto h = bismash(default_corpus()[0]);
  CHECK_THROWS_AS(analyze(h, 2), InvalidArgument);
}
