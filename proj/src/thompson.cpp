#include "hopfbrauer/thompson.hpp"

#include <algorithm>
#include <fstream>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

namespace {

std::vector<unsigned> read_primes(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("corpus: \"primes\" must be an array");
  std::vector<unsigned> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw InvalidArgument("corpus: primes must be positive integers");
    const auto p = x.get<unsigned>();
    if (p == 2 || !nt::is_prime(p)) throw InvalidArgument("corpus: " + std::to_string(p) + " is not an odd prime");
    out.push_back(p);
  }
  return out;
}

std::vector<std::string> read_block(const nlohmann::json& m, const char* key) {
  if (!m.contains(key) || !m[key].is_array()) throw InvalidArgument(std::string("corpus: member lacks \"") + key + "\"");
  std::vector<std::string> out;
  for (const auto& s : m[key]) out.push_back(s.get<std::string>());
  return out;
}

}  // namespace

std::vector<CorpusMember> parse_corpus(const nlohmann::json& j, std::size_t element_cap) {
  if (!j.is_object() || !j.contains("members")) throw InvalidArgument("corpus: expected an object with \"members\"");
  if (j.contains("schema") && j["schema"] != 1) throw InvalidArgument("corpus: unsupported schema");
  const auto primes = j.contains("primes") ? read_primes(j["primes"]) : std::vector<unsigned>{3, 5, 7};
  std::vector<CorpusMember> out;
  for (const auto& m : j["members"]) {
    CorpusMember c;
    c.primes = m.contains("primes") ? read_primes(m["primes"]) : primes;
    if (m.contains("sn")) {
      const auto n = m["sn"].get<std::size_t>();
      if (n < 2) throw InvalidArgument("corpus: sn must be at least 2");
      c.fg = std::make_shared<const FactoredGroup>(symmetric_factorization(n));
      c.name = m.value("name", "S" + std::to_string(n));
    } else {
      const GroupBlocks blocks{read_block(m, "q"), read_block(m, "f"), read_block(m, "g")};
      c.fg = std::make_shared<const FactoredGroup>(build_from_blocks(blocks, element_cap));
      c.name = m.value("name", "member" + std::to_string(out.size()));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CorpusMember> load_corpus(const std::string& path, std::size_t element_cap) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open corpus file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("corpus " + path + ": " + e.what());
  }
  return parse_corpus(j, element_cap);
}

std::vector<CorpusMember> default_corpus() {
  std::vector<CorpusMember> out;
  for (std::size_t n = 3; n <= 5; ++n)
    out.push_back({"H" + std::to_string(n), std::make_shared<const FactoredGroup>(symmetric_factorization(n)),
                   {3, 5, 7}});
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Vacuous:
      return "VACUOUS";
  }
  return "?";
}

HAnalysis analyze(std::shared_ptr<const Bismash> h, unsigned p, std::uint64_t seed) {
  HAnalysis a;
  a.h = h;
  a.p = p;
  a.ord = char0_simples(*h, seed);
  a.mod = modular_simples(*h, p, seed);
  a.dec = h_decomposition(*h, a.ord, a.mod);
  for (const auto& chi : a.ord.characters) {
    a.ord_indicators.push_back(indicator_char0(*h, chi));
    a.ord_self_dual.push_back(is_self_dual(*h, chi));
  }
  for (std::size_t j = 0; j < a.mod.modules.size(); ++j) {
    a.mod_indicators.push_back(indicator_modular(*h, a.mod.modules[j]));
    a.mod_self_dual.push_back(is_self_dual(*h, a.mod.characters[j]));
  }
  return a;
}

bool LiftReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const LiftEntry& e) { return e.pass; });
}

LiftReport verify_thompson(const HAnalysis& a) {
  if (a.p == 2) throw InvalidArgument("verify_thompson: p = 2 is excluded");
  LiftReport r;
  r.p = a.p;
  r.cartan_det_odd = a.dec.cartan.determinant % 2 != 0;
  for (std::size_t j = 0; j < a.mod.modules.size(); ++j) {
    if (!a.mod_self_dual[j]) continue;
    LiftEntry e;
    e.modular = j;
    e.modular_indicator = a.mod_indicators[j];
    for (std::size_t i = 0; i < a.ord.characters.size(); ++i)
      if (a.ord_self_dual[i] && a.dec.d[i][j] % 2 == 1) {
        e.lifts.push_back(i);
        e.lift_indicators.push_back(a.ord_indicators[i]);
      }
    e.pass = !e.lifts.empty() && std::all_of(e.lift_indicators.begin(), e.lift_indicators.end(),
                                             [&](int nu) { return nu == e.modular_indicator; });
    r.entries.push_back(std::move(e));
  }
  return r;
}

bool OrthReport::pass() const {
  return std::none_of(clauses.begin(), clauses.end(), [](Verdict v) { return v == Verdict::Fail; });
}

OrthReport verify_orth_descent(const HAnalysis& a) {
  if (a.p == 2) throw InvalidArgument("verify_orth_descent: p = 2 is excluded");
  OrthReport r;
  r.p = a.p;
  auto all = [](const auto& v, auto pred) { return std::all_of(v.begin(), v.end(), pred); };
  auto clause = [](bool hypothesis, bool conclusion) {
    if (!hypothesis) return Verdict::Vacuous;
    return conclusion ? Verdict::Pass : Verdict::Fail;
  };
  const auto plus_one = [](int nu) { return nu == 1; };
  const auto non_negative = [](int nu) { return nu == 0 || nu == 1; };
  const auto yes = [](bool b) { return b; };
  r.clauses[0] = clause(all(a.ord_indicators, plus_one), all(a.mod_indicators, plus_one));
  r.clauses[1] = clause(all(a.ord_indicators, non_negative), all(a.mod_indicators, non_negative));
  r.clauses[2] = clause(all(a.ord_self_dual, yes), all(a.mod_self_dual, yes));
  return r;
}

}  // namespace hopfbrauer
