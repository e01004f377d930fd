#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hopfbrauer/bismash_reps.hpp"
#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/exact_linalg.hpp"

using namespace hopfbrauer;

namespace {

Bismash family(std::size_t n) {
  return Bismash(std::make_shared<const FactoredGroup>(symmetric_factorization(n)));
}

Bismash from_blocks(const PermGroup& q, const PermGroup& f, const PermGroup& g) {
  return Bismash(std::make_shared<const FactoredGroup>(FactoredGroup::build(q, f, g)));
}

std::size_t dim_squares(const CharZeroSimples& s) {
  std::size_t sum = 0;
  for (const auto& m : s.modules) sum += m.dim * m.dim;
  return sum;
}

std::vector<Cyc> restrict_to(const Bismash& h, const HCharacter& chi, const std::vector<BasisElem>& domain) {
  std::vector<Cyc> out;
  for (const auto& w : domain) out.push_back(chi.values[h.index(w)]);
  return out;
}

}  // namespace

TEST_CASE("simple modules in characteristic 0") {
  const auto h3 = family(3);
  const auto s3 = char0_simples(h3);
  REQUIRE(s3.modules.size() == 3);
  std::vector<std::size_t> dims;
  for (const auto& m : s3.modules) dims.push_back(m.dim);
  CHECK(dims == std::vector<std::size_t>{1, 1, 2});
  CHECK(dim_squares(s3) == 6);

  const std::size_t counts[] = {0, 0, 0, 3, 5, 8};
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto h = family(n);
    const auto s = char0_simples(h);
    CHECK(dim_squares(s) == h.dim());
    CHECK(s.modules.size() == counts[n]);
    std::size_t expected = 0;
    for (const auto& od : s.orbits) expected += conjugacy_classes(*od.stabilizer).count();
    CHECK(s.modules.size() == expected);
    for (std::size_t i = 0; i < s.modules.size(); ++i)
      for (std::size_t j = i + 1; j < s.modules.size(); ++j)
        CHECK(s.characters[i].values != s.characters[j].values);
  }
}

TEST_CASE("character formula against traces in characteristic 0") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto h = family(n);
    const auto s = char0_simples(h);
    const LiftContext lifts(s.field);
    for (std::size_t i = 0; i < s.modules.size(); ++i) {
      const auto& chi = s.characters[i];
      CHECK(trace_character(h, s.modules[i], lifts).values == chi.values);
      const auto& od = s.orbits[chi.orbit];
      Cyc total(0);
      for (std::size_t y = 0; y < h.g().order(); ++y) {
        const Cyc v = chi.values[h.index({y, 0})];
        total += v;
        // one t ∈ T_x with y◁t = x when y is in the orbit
        CHECK(v == (od.slot(y) >= 0 ? s.tables[chi.orbit].values[chi.irr][0] : Cyc(0)));
      }
      CHECK(total == Cyc(static_cast<long>(s.modules[i].dim)));
      for (const auto& w : h.basis())
        if (od.slot(w.y) < 0 || !h.in_bprime(w)) CHECK(chi.values[h.index(w)].is_zero());
    }
  }
  const auto h3 = family(3);
  const auto s3 = char0_simples(h3);
  const std::size_t z = h3.g().index_of(Perm::parse("(1 2 3)", 3));
  CHECK(s3.characters[2].values[h3.index({z, 0})] == Cyc(1));
}

TEST_CASE("duality and indicators in characteristic 0") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto h = family(n);
    const auto s = char0_simples(h);
    std::set<std::vector<Cyc>> all;
    for (const auto& c : s.characters) all.insert(c.values);
    for (std::size_t i = 0; i < s.characters.size(); ++i) {
      const auto& chi = s.characters[i];
      const auto dual = dual_character(h, chi);
      CHECK(dual_character(h, dual).values == chi.values);
      CHECK(all.count(dual.values) == 1);
      const int nu = indicator_char0(h, chi);
      CHECK(nu == 1);
      CHECK(is_self_dual(h, chi));
      // form-based indicator on the GF(q0) realization agrees
      CHECK(indicator_modular(h, s.modules[i]) == nu);
    }
    CHECK(is_self_dual(h, s.characters[0]));
  }
}

TEST_CASE("non-self-dual simples") {
  const auto c3 = cyclic_group(3);
  const auto one = enumerate({}, 3);
  for (const auto& h : {from_blocks(c3, c3, one), from_blocks(c3, one, c3)}) {
    const auto s = char0_simples(h);
    REQUIRE(s.modules.size() == 3);
    std::multiset<int> nus;
    for (std::size_t i = 0; i < 3; ++i) {
      const int nu = indicator_char0(h, s.characters[i]);
      nus.insert(nu);
      CHECK((nu != 0) == is_self_dual(h, s.characters[i]));
      CHECK(indicator_modular(h, s.modules[i]) == nu);
    }
    CHECK(nus == std::multiset<int>{0, 0, 1});
    for (unsigned p : {5u, 7u}) {
      const auto m = modular_simples(h, p);
      REQUIRE(m.modules.size() == 3);
      std::multiset<int> mods;
      for (std::size_t i = 0; i < 3; ++i) {
        const int nu = indicator_modular(h, m.modules[i]);
        mods.insert(nu);
        CHECK((nu != 0) == is_self_dual(h, m.characters[i]));
      }
      CHECK(mods == std::multiset<int>{0, 0, 1});
    }
  }
}

TEST_CASE("modular simples, Brauer characters and indicators") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto h = family(n);
    for (unsigned p : {3u, 5u, 7u}) {
      INFO("n = " << n << ", p = " << p);
      const auto m = modular_simples(h, p);
      const LiftContext lifts(m.field);
      std::size_t expected = 0;
      for (const auto& od : m.orbits) {
        const auto cc = conjugacy_classes(*od.stabilizer);
        expected += p_regular_classes(*od.stabilizer, cc, p).size();
      }
      CHECK(m.modules.size() == expected);
      for (std::size_t i = 0; i < m.modules.size(); ++i) {
        const auto& phi = m.characters[i];
        CHECK(trace_brauer_character(h, m.modules[i], lifts).values == phi.values);
        for (std::size_t k = 0; k < phi.domain.size(); ++k) {
          const auto& w = phi.domain[k];
          const auto& lift = lifts.get(static_cast<unsigned>(h.f().element_order(w.a)));
          CHECK(reduce(phi.values[k], lift) == trace(m.modules[i].rho[h.index(w)]));
        }
        CHECK(dual_character(h, dual_character(h, phi)).values == phi.values);
        CHECK(is_self_dual(h, phi));
        CHECK(indicator_modular(h, m.modules[i]) == 1);
        for (const auto& w : h.basis())
          if (h.in_bprime(w) && h.f().element_order(w.a) % p == 0) CHECK(hfactor_check(h, m.modules[i], w, p));
      }
      const auto cert = h_brauer_independence(m.characters);
      CHECK(cert.independent());
    }
  }
  CHECK_THROWS_AS(modular_simples(family(3), 2), InvalidArgument);
  CHECK_THROWS_AS(modular_simples(family(3), 9), InvalidArgument);
}

TEST_CASE("Brauer characters of H3 at p = 3") {
  const auto h = family(3);
  const auto m = modular_simples(h, 3);
  REQUIRE(m.modules.size() == 3);
  CHECK(m.modules[2].dim == 2);
  const std::size_t z = h.g().index_of(Perm::parse("(1 2 3)", 3));
  const auto& phi = m.characters[2];
  const auto it = std::find(phi.domain.begin(), phi.domain.end(), BasisElem{z, 0});
  REQUIRE(it != phi.domain.end());
  CHECK(phi.values[static_cast<std::size_t>(it - phi.domain.begin())] == Cyc(1));
  for (std::size_t k = 0; k < phi.domain.size(); ++k)
    if (phi.domain[k].a == 0 && m.orbits[phi.orbit].slot(phi.domain[k].y) >= 0) CHECK(phi.values[k] == Cyc(1));
}

TEST_CASE("independence certificate") {
  const auto h = family(4);
  const auto m = modular_simples(h, 3);
  CHECK(h_brauer_independence({m.characters[0]}).rank == 1);
  auto dup = m.characters;
  dup.push_back(dup.front());
  const auto cert = h_brauer_independence(dup);
  CHECK(!cert.independent());
  CHECK(cert.rank == m.characters.size());
}

TEST_CASE("H-level decomposition") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto h = family(n);
    const auto ord = char0_simples(h);
    for (unsigned p : {3u, 5u, 7u}) {
      INFO("n = " << n << ", p = " << p);
      const auto mod = modular_simples(h, p);
      const auto dec = h_decomposition(h, ord, mod);
      CHECK(dec.paths_agree);
      CHECK(dec.block_diagonal);
      CHECK(dec.cartan.is_p_power);
      if (h.f().order() % p != 0) {
        CHECK(dec.cartan.exponent == 0);
        for (std::size_t i = 0; i < dec.d.size(); ++i)
          for (std::size_t j = 0; j < dec.d[i].size(); ++j) CHECK(dec.d[i][j] == (i == j ? 1 : 0));
      }
      // each φ̂_j lies in the span of the restricted ordinary characters
      ExactMatrix<Cyc> rows;
      for (const auto& chi : ord.characters) rows.push_back(restrict_to(h, chi, mod.characters[0].domain));
      const std::size_t r = exact_rank(rows);
      for (const auto& phi : mod.characters) {
        auto ext = rows;
        ext.push_back(phi.values);
        CHECK(exact_rank(ext) == r);
      }
    }
  }
  const auto h5 = family(5);
  const auto dec = h_decomposition(h5, char0_simples(h5), modular_simples(h5, 3));
  CHECK(dec.cartan.is_p_power);
  CHECK(dec.cartan.exponent >= 1);
}

TEST_CASE("additivity over composition factors") {
  const auto h = family(4);
  const auto m = modular_simples(h, 3);
  const LiftContext lifts(m.field);
  std::size_t q = 0;
  while (m.orbits[q].stabilizer->order() != 6) ++q;
  const auto& od = m.orbits[q];
  const PermGroup& s3 = *od.stabilizer;
  // permutation module on the moved points of F_x
  std::vector<std::size_t> moved;
  for (std::size_t i = 0; i < s3.degree(); ++i)
    for (const auto& g : s3.generators())
      if (g[i] != i && std::find(moved.begin(), moved.end(), i) == moved.end()) moved.push_back(i);
  REQUIRE(moved.size() == 3);
  std::vector<FFMatrix> gens;
  for (const auto& g : s3.generators()) {
    FFMatrix a(m.field, 3, 3);
    for (std::size_t c = 0; c < 3; ++c)
      a(static_cast<std::size_t>(std::find(moved.begin(), moved.end(), g[moved[c]]) - moved.begin()), c) = 1;
    gens.push_back(a);
  }
  const auto base = make_module(m.field, 3, gens);

  // End(base) is two-dimensional and local: indecomposable, not simple.
  std::vector<FFVector> eqs;
  for (const auto& a : gens)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        FFVector row(9, 0);
        for (std::size_t l = 0; l < 3; ++l) {
          row[i * 3 + l] = m.field->add(row[i * 3 + l], a(l, j));
          row[l * 3 + j] = m.field->sub(row[l * 3 + j], a(i, l));
        }
        eqs.push_back(row);
      }
  FFMatrix sys(m.field, eqs.size(), 9);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < 9; ++c) sys(r, c) = eqs[r][c];
  const FFMatrix end = nullspace(sys);
  REQUIRE(end.rows() == 2);
  for (std::size_t r = 0; r < 2; ++r) {
    FFMatrix x(m.field, 3, 3);
    for (std::size_t c = 0; c < 9; ++c) x(c / 3, c % 3) = end(r, c);
    CHECK(ffpoly::irreducible_factors(*m.field, charpoly(x)).size() == 1);
  }
  CHECK(!is_irreducible(base));

  const auto induced = induce(h, od, q, base);
  const auto lhs = trace_brauer_character(h, induced, lifts);
  std::vector<Cyc> rhs(lhs.values.size(), Cyc(0));
  std::size_t factors = 0;
  for (const auto& f : chop(base)) {
    const std::size_t j = match_irreducible(m.groups[q], f.module);
    const auto phi = brauer_character_of(h, od, q, m.groups[q], j);
    for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += Cyc(static_cast<long>(f.multiplicity)) * phi.values[k];
    factors += f.multiplicity;
  }
  CHECK(factors == 3);
  CHECK(lhs.values == rhs);
}

TEST_CASE("modular indicator needs a simple module") {
  const auto h = family(3);
  const auto od = orbit_data(h);
  const auto field = build_field(5, 1);
  std::vector<FFMatrix> gens;
  for (std::size_t k = 0; k < od[0].stabilizer->generators().size(); ++k) gens.push_back(FFMatrix::identity(field, 2));
  const auto m = induce(h, od[0], 0, make_module(field, 2, gens));
  CHECK_THROWS_AS(indicator_modular(h, m), InvalidArgument);
}
