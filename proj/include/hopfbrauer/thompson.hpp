#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfbrauer/bismash_reps.hpp"

namespace hopfbrauer {

struct CorpusMember {
  std::string name;
  std::shared_ptr<const FactoredGroup> fg;
  std::vector<unsigned> primes;
};

/// {"schema": 1, "primes": [...], "members": [{"name", "q", "f", "g"} | {"name", "sn"}]}
/// A member may carry its own "primes". p = 2 is rejected.
std::vector<CorpusMember> parse_corpus(const nlohmann::json& j, std::size_t element_cap = kDefaultElementCap);
std::vector<CorpusMember> load_corpus(const std::string& path, std::size_t element_cap = kDefaultElementCap);
/// S_n = S_{n-1} C_n for n = 3, 4, 5 with p = 3, 5, 7.
std::vector<CorpusMember> default_corpus();

enum class Verdict { Pass, Fail, Vacuous };
const char* to_string(Verdict v);

/// Everything computed for one (H, p).
struct HAnalysis {
  std::shared_ptr<const Bismash> h;
  unsigned p = 0;
  CharZeroSimples ord;
  ModularSimples mod;
  HDecomposition dec;
  std::vector<int> ord_indicators;
  std::vector<bool> ord_self_dual;
  std::vector<int> mod_indicators;
  std::vector<bool> mod_self_dual;
};
HAnalysis analyze(std::shared_ptr<const Bismash> h, unsigned p, std::uint64_t seed = 0);

struct LiftEntry {
  std::size_t modular = 0;
  int modular_indicator = 0;
  std::vector<std::size_t> lifts;  // self-dual ordinary simples with odd decomposition number
  std::vector<int> lift_indicators;
  bool pass = false;
};

struct LiftReport {
  unsigned p = 0;
  std::vector<LiftEntry> entries;  // one per self-dual modular simple
  bool cartan_det_odd = false;
  bool pass() const;
};
LiftReport verify_thompson(const HAnalysis& a);

struct OrthReport {
  unsigned p = 0;
  std::array<Verdict, 3> clauses{};
  bool pass() const;
};
OrthReport verify_orth_descent(const HAnalysis& a);

}  // namespace hopfbrauer
