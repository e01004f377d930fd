#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "hopfbrauer/cli.hpp"
#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/thompson.hpp"
#include "int_reps.hpp"

using namespace hopfbrauer;
using namespace hopfbrauer::testing;

namespace {

struct Member {
  std::string name;
  std::shared_ptr<const Bismash> h;
  std::vector<unsigned> primes;
  bool family = false;
};

std::vector<Member> corpus() {
  std::vector<Member> out;
  for (const auto& m : default_corpus()) out.push_back({m.name, std::make_shared<const Bismash>(m.fg), m.primes, true});
  for (const auto& m : load_corpus(std::string(HOPFBRAUER_DATA_DIR) + "/extended_corpus.json"))
    out.push_back({m.name, std::make_shared<const Bismash>(m.fg), m.primes, false});
  return out;
}

class Ledger {
 public:
  explicit Ledger(std::ostream& log) : log_(log) {}
  void fail(const std::string& what) {
    ok_ = false;
    log_ << "    failed: " << what << "\n";
  }
  void check(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  bool ok() const { return ok_; }

 private:
  std::ostream& log_;
  bool ok_ = true;
};

using Criterion = std::function<void(Ledger&)>;

const std::vector<std::string> kRequiredAxioms = {"associativity", "coassociativity", "counit", "antipode axiom",
                                                  "S^2 = id", "S is an antihomomorphism", "integral law"};

void hopf_axioms(Ledger& l) {
  for (const auto& m : corpus()) {
    std::set<std::string> seen;
    for (const auto& a : axiom_battery(*m.h, m.primes)) {
      seen.insert(a.name);
      l.check(a.pass && a.checked > 0, m.name + ": " + a.name);
    }
    for (const auto& name : kRequiredAxioms) l.check(seen.count(name) == 1, m.name + ": battery lacks " + name);
  }
}

void basis_classification(Ledger& l) {
  for (const auto& m : corpus()) {
    const Bismash& h = *m.h;
    for (unsigned p : {3u, 5u, 7u}) {
      const auto c = classify(h, p);
      std::vector<BasisElem> nonnilpotent, regular;
      for (const auto& w : h.basis()) {
        const auto e = basis_element<Rational>(w);
        if (h_multiply(h, e, e).empty()) continue;
        nonnilpotent.push_back(w);
        if (std::gcd(h.f().element_order(w.a), static_cast<std::size_t>(p)) == 1) regular.push_back(w);
      }
      l.check(c.bprime == nonnilpotent, m.name + ": B' differs from {w : w^2 != 0}");
      l.check(c.bpprime == regular, m.name + ": B_p' differs at p = " + std::to_string(p));
      for (const auto* set : {&c.bprime, &c.bpprime}) {
        const std::set<BasisElem> s(set->begin(), set->end());
        for (const auto& w : *set) {
          const auto sw = h_antipode(h, basis_element<Rational>(w));
          l.check(sw.size() == 1 && s.count(sw.begin()->first) == 1,
                  m.name + ": S(" + h.label(w) + ") leaves its class");
        }
      }
    }
  }
}

void dimension_count(Ledger& l) {
  for (const auto& m : corpus()) {
    const auto s = char0_simples(*m.h);
    std::size_t sum = 0;
    for (const auto& mod : s.modules) sum += mod.dim * mod.dim;
    l.check(sum == m.h->g().order() * m.h->f().order(), m.name + ": sum of squares " + std::to_string(sum));
  }
}

void character_formula(Ledger& l) {
  for (const auto& m : corpus()) {
    const Bismash& h = *m.h;
    const auto ord = char0_simples(h);
    const LiftContext lifts0(ord.field);
    for (std::size_t i = 0; i < ord.modules.size(); ++i)
      l.check(trace_character(h, ord.modules[i], lifts0).values == ord.characters[i].values,
              m.name + ": char 0 simple " + std::to_string(i));
    for (unsigned p : m.primes) {
      const auto mod = modular_simples(h, p);
      const LiftContext lifts(mod.field);
      for (std::size_t j = 0; j < mod.modules.size(); ++j) {
        const auto trace = trace_brauer_character(h, mod.modules[j], lifts);
        l.check(trace.domain == mod.characters[j].domain && trace.values == mod.characters[j].values,
                m.name + ": p = " + std::to_string(p) + " simple " + std::to_string(j));
      }
    }
  }
}

void orthogonality_char0(Ledger& l) {
  for (const auto& m : corpus()) {
    if (!m.family) continue;
    const auto s = char0_simples(*m.h);
    for (std::size_t i = 0; i < s.characters.size(); ++i)
      l.check(indicator_char0(*m.h, s.characters[i]) == 1, m.name + ": simple " + std::to_string(i));
  }
}

void orthogonality_modular(Ledger& l) {
  for (const auto& m : corpus()) {
    if (!m.family) continue;
    for (unsigned p : {3u, 5u, 7u}) {
      const auto s = modular_simples(*m.h, p);
      for (std::size_t j = 0; j < s.modules.size(); ++j)
        l.check(indicator_modular(*m.h, s.modules[j]) == 1,
                m.name + ": p = " + std::to_string(p) + " simple " + std::to_string(j));
    }
  }
}

void group_brauer(Ledger& l) {
  const unsigned p = 3;
  auto twisted = [](const Perm& g) {
    auto m = standard(g);
    for (auto& row : m)
      for (auto& x : row) x *= sign(g);
    return m;
  };
  const IntRep trivial = [](const Perm&) { return std::vector<std::vector<long>>{{1}}; };
  const IntRep sgn = [](const Perm& g) { return std::vector<std::vector<long>>{{sign(g)}}; };
  const std::vector<std::pair<std::size_t, std::vector<IntRep>>> cases = {
      {3, {trivial, sgn, standard}},
      {4, {trivial, sgn, [](const Perm& g) { return standard(on_pairings(g)); }, standard, twisted}}};
  for (const auto& [n, reps] : cases) {
    const std::string name = "S" + std::to_string(n);
    const auto group = std::make_shared<const PermGroup>(symmetric_group(n));
    const auto ct = character_table(group);
    const auto data = modular_data(group, p);
    const auto d = decomposition_matrix(ct, data.ibr, p);
    IntMatrix oracle(ct.size());
    for (const auto& rep : reps) {
      const auto row = std::find(ct.values.begin(), ct.values.end(), class_traces(*group, ct.classes, rep));
      if (row == ct.values.end()) {
        l.fail(name + ": integral representation not found in the table");
        continue;
      }
      std::vector<long long> counts(data.ibr.size(), 0);
      for (const auto& f : chop(reduce_rep(*group, data.field, rep)))
        counts[match_irreducible(data, f.module)] += static_cast<long long>(f.multiplicity);
      oracle[static_cast<std::size_t>(row - ct.values.begin())] = counts;
    }
    l.check(d == oracle, name + ": restriction solve differs from reduction and chop");
    const auto c = cartan(d, p);
    l.check(c.is_p_power, name + ": det C = " + c.determinant.get_str());
  }
}

void h_blocks(Ledger& l) {
  for (const auto& m : corpus()) {
    const auto ord = char0_simples(*m.h);
    for (unsigned p : m.primes) {
      const auto dec = h_decomposition(*m.h, ord, modular_simples(*m.h, p));
      const std::string tag = m.name + " p = " + std::to_string(p) + ": ";
      l.check(dec.paths_agree, tag + "paths disagree");
      l.check(dec.block_diagonal, tag + "not block diagonal");
      l.check(dec.cartan.is_p_power, tag + "det C^ = " + dec.cartan.determinant.get_str());
    }
  }
}

void brauer_properties(Ledger& l) {
  for (const auto& m : corpus()) {
    const Bismash& h = *m.h;
    for (unsigned p : m.primes) {
      const std::string tag = m.name + " p = " + std::to_string(p) + ": ";
      const auto s = modular_simples(h, p);
      const LiftContext lifts(s.field);
      for (std::size_t j = 0; j < s.modules.size(); ++j) {
        const auto& phi = s.characters[j];
        for (std::size_t k = 0; k < phi.domain.size(); ++k) {
          const auto& w = phi.domain[k];
          const auto& lift = lifts.get(static_cast<unsigned>(h.f().element_order(w.a)));
          l.check(reduce(phi.values[k], lift) == trace(s.modules[j].rho[h.index(w)]),
                  tag + "reduction at " + h.label(w));
        }
        for (const auto& w : h.basis())
          if (h.in_bprime(w) && h.f().element_order(w.a) % p == 0)
            l.check(hfactor_check(h, s.modules[j], w, p), tag + "eigenvalues at " + h.label(w));
      }
      l.check(h_brauer_independence(s.characters).independent(), tag + "Brauer characters dependent");

      // induced regular modules of each F_x against their composition factors
      for (std::size_t q = 0; q < s.orbits.size(); ++q) {
        const auto& od = s.orbits[q];
        const auto base = regular_module(*od.stabilizer, s.field);
        const auto lhs = trace_brauer_character(h, induce(h, od, q, base), lifts);
        std::vector<Cyc> rhs(lhs.values.size(), Cyc(0));
        for (const auto& f : chop(base)) {
          const auto phi = brauer_character_of(h, od, q, s.groups[q], match_irreducible(s.groups[q], f.module));
          for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += Cyc(static_cast<long>(f.multiplicity)) * phi.values[k];
        }
        l.check(lhs.values == rhs, tag + "additivity on orbit " + std::to_string(q));
      }
    }
  }
}

void thompson_lift(Ledger& l) {
  for (const auto& m : corpus())
    for (unsigned p : m.primes) {
      const auto r = verify_thompson(analyze(m.h, p));
      l.check(r.pass(), m.name + " p = " + std::to_string(p));
    }
}

std::string run_in_process(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"hopfbrauer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::string run_process(const std::string& args) {
  const std::string cmd = std::string(HOPFBRAUER_CLI) + " " + args;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw InternalError("cannot start " + cmd);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  return std::to_string(pclose(pipe)) + "\n" + out;
}

void determinism(Ledger& l) {
  for (const std::string seed : {"0", "20261016"}) {
    for (const std::string format : {"text", "json"}) {
      const std::vector<std::string> args{"selftest", "--seed", seed, "--format", format};
      const auto a = run_in_process(args);
      const auto b = run_in_process(args);
      l.check(a == b, "in-process selftest, seed " + seed + ", " + format);
      l.check(a.starts_with("0\n"), "selftest exit code, seed " + seed);
      const auto c = run_process("selftest --seed " + seed + " --format " + format);
      const auto d = run_process("selftest --seed " + seed + " --format " + format);
      l.check(c == d, "separate processes, seed " + seed + ", " + format);
      l.check(c == a, "process and in-process output differ, seed " + seed + ", " + format);
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"Hopf axiom battery", hopf_axioms},
      {"basis classification and closure under S", basis_classification},
      {"semisimple dimension count", dimension_count},
      {"character formula equals induced traces", character_formula},
      {"total orthogonality in characteristic 0", orthogonality_char0},
      {"total orthogonality in characteristic p", orthogonality_modular},
      {"group decomposition matrices for S3, S4 at p = 3", group_brauer},
      {"H-level block structure and det C^", h_blocks},
      {"Brauer character properties", brauer_properties},
      {"indicator lifting", thompson_lift},
      {"selftest determinism", determinism}};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    Ledger l(log);
    try {
      criteria[i].second(l);
    } catch (const std::exception& e) {
      l.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (l.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n"
              << log.str();
    all &= l.ok();
  }
  return all ? 0 : 1;
}
