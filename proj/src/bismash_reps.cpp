#include "hopfbrauer/bismash_reps.hpp"

#include <algorithm>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/exact_linalg.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

long OrbitData::slot(std::size_t y) const {
  const auto it = std::lower_bound(orbit.points.begin(), orbit.points.end(), y);
  if (it == orbit.points.end() || *it != y) return -1;
  return static_cast<long>(it - orbit.points.begin());
}

std::vector<OrbitData> orbit_data(const Bismash& h) {
  std::vector<OrbitData> out;
  for (const auto& orb : h.orbits()) {
    OrbitData od;
    od.orbit = orb;
    od.rep = orb.representative;
    od.stabilizer = std::make_shared<const PermGroup>(subgroup_from_elements(h.f(), orb.stabilizer));
    od.from_f.assign(h.f().order(), -1);
    for (std::size_t i = 0; i < od.stabilizer->order(); ++i) {
      const std::size_t a = h.f().index_of(od.stabilizer->element(i));
      od.to_f.push_back(a);
      od.from_f[a] = static_cast<long>(i);
    }
    out.push_back(std::move(od));
  }
  return out;
}

InducedModule induce(const Bismash& h, const OrbitData& od, std::size_t orbit, const FFModule& base,
                     std::size_t irr) {
  const PermGroup& f = h.f();
  const FactoredGroup& fg = h.factored();
  const auto mats = element_matrices(*od.stabilizer, base);
  const std::size_t slots = od.orbit.points.size();
  const std::size_t d = base.dim;
  InducedModule m;
  m.orbit = orbit;
  m.irr = irr;
  m.base = base;
  m.dim = slots * d;
  m.rho.reserve(h.dim());
  for (const auto& w : h.basis()) {
    FFMatrix r(base.field, m.dim, m.dim);
    for (std::size_t k = 0; k < slots; ++k) {
      const std::size_t at = f.multiply(w.a, od.orbit.transversal[k]);
      if (fg.lhd(w.y, at) != od.rep) continue;
      const long k2 = od.slot(fg.lhd(od.rep, f.inverse(at)));
      if (k2 < 0) throw InternalError("induce: point outside the orbit");
      const std::size_t t2 = od.orbit.transversal[static_cast<std::size_t>(k2)];
      const long hs = od.from_f[f.multiply(f.inverse(t2), at)];
      if (hs < 0) throw InternalError("induce: coset representative mismatch");
      const FFMatrix& block = mats[static_cast<std::size_t>(hs)];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r(static_cast<std::size_t>(k2) * d + i, k * d + j) = block(i, j);
    }
    m.rho.push_back(std::move(r));
  }

  FFMatrix sum(base.field, m.dim, m.dim);
  for (std::size_t y = 0; y < h.g().order(); ++y) sum = sum + m.rho[h.index({y, 0})];
  if (!sum.is_identity()) throw InternalError("induce: unit does not act as the identity");
  const FFMatrix zero(base.field, m.dim, m.dim);
  for (const auto& u : h.basis())
    for (const auto& v : h.basis()) {
      const auto uv = h.multiply(u, v);
      const FFMatrix& expected = uv ? m.rho[h.index(*uv)] : zero;
      if (!(m.rho[h.index(u)] * m.rho[h.index(v)] == expected))
        throw InternalError("induce: action fails on " + h.label(u) + " * " + h.label(v));
    }
  return m;
}

Cyc induced_value(const Bismash& h, const OrbitData& od, BasisElem w, const std::vector<Cyc>& chi_on_elements) {
  const PermGroup& f = h.f();
  Cyc sum(0);
  for (auto t : od.orbit.transversal) {
    if (h.factored().lhd(w.y, t) != od.rep) continue;
    const long c = od.from_f[f.multiply(f.inverse(t), f.multiply(w.a, t))];
    if (c >= 0) sum += chi_on_elements[static_cast<std::size_t>(c)];
  }
  return sum;
}

HCharacter character_of(const Bismash& h, const OrbitData& od, std::size_t orbit, const CharTable& ct,
                        std::size_t row) {
  std::vector<Cyc> chi(od.stabilizer->order());
  for (std::size_t i = 0; i < chi.size(); ++i) chi[i] = ct.at_element(row, i);
  HCharacter out{orbit, row, {}};
  out.values.reserve(h.dim());
  for (const auto& w : h.basis()) out.values.push_back(induced_value(h, od, w, chi));
  return out;
}

BrauerHCharacter brauer_character_of(const Bismash& h, const OrbitData& od, std::size_t orbit,
                                     const ModularData& data, std::size_t irr) {
  const auto& phi = data.ibr.at(irr);
  std::vector<Cyc> on_elements(od.stabilizer->order());
  for (std::size_t i = 0; i < on_elements.size(); ++i) {
    const auto pos = std::find(phi.class_ids.begin(), phi.class_ids.end(), data.classes.class_of[i]);
    if (pos != phi.class_ids.end()) on_elements[i] = phi.values[static_cast<std::size_t>(pos - phi.class_ids.begin())];
  }
  BrauerHCharacter out{orbit, irr, data.p, classify(h, data.p).bpprime, {}};
  for (const auto& w : out.domain) out.values.push_back(induced_value(h, od, w, on_elements));
  return out;
}

HCharacter dual_character(const Bismash& h, const HCharacter& chi) {
  HCharacter out = chi;
  for (const auto& w : h.basis()) out.values[h.index(w)] = chi.values[h.index(h.antipode(w))];
  return out;
}

BrauerHCharacter dual_character(const Bismash& h, const BrauerHCharacter& phi) {
  std::map<BasisElem, std::size_t> pos;
  for (std::size_t i = 0; i < phi.domain.size(); ++i) pos[phi.domain[i]] = i;
  BrauerHCharacter out = phi;
  for (std::size_t i = 0; i < phi.domain.size(); ++i) {
    const auto it = pos.find(h.antipode(phi.domain[i]));
    if (it == pos.end()) throw InternalError("dual_character: domain not closed under the antipode");
    out.values[i] = phi.values[it->second];
  }
  return out;
}

HCharacter trace_character(const Bismash& h, const InducedModule& m, const LiftContext& lifts) {
  HCharacter out{m.orbit, m.irr, {}};
  for (const auto& w : h.basis()) {
    const FFMatrix& r = m.rho[h.index(w)];
    if (h.in_bprime(w)) {
      out.values.push_back(lifted_trace(r, lifts.get(static_cast<unsigned>(h.f().element_order(w.a)))));
    } else {
      if (!(r * r).is_zero()) throw InternalError("trace_character: " + h.label(w) + " does not act nilpotently");
      out.values.push_back(Cyc(0));
    }
  }
  return out;
}

BrauerHCharacter trace_brauer_character(const Bismash& h, const InducedModule& m, const LiftContext& lifts) {
  const unsigned p = m.base.field->characteristic();
  BrauerHCharacter out{m.orbit, m.irr, p, classify(h, p).bpprime, {}};
  for (const auto& w : out.domain)
    out.values.push_back(
        lifted_trace(m.rho[h.index(w)], lifts.get(static_cast<unsigned>(h.f().element_order(w.a)))));
  return out;
}

CharZeroSimples char0_simples(const Bismash& h, std::uint64_t seed) {
  CharZeroSimples out;
  const auto e = static_cast<unsigned>(h.f().exponent());
  const unsigned q0 = next_prime_congruent_one(e, static_cast<unsigned>(std::max<std::size_t>(h.f().order(), 100)));
  out.field = build_field(q0, 1);
  out.orbits = orbit_data(h);
  for (std::size_t q = 0; q < out.orbits.size(); ++q) {
    const auto& od = out.orbits[q];
    out.tables.push_back(character_table(od.stabilizer));
    const CharTable& ct = out.tables.back();
    const auto data = modular_data(od.stabilizer, q0, seed, out.field);
    std::vector<long> module_of_row(ct.size(), -1);
    for (std::size_t j = 0; j < data.ibr.size(); ++j) {
      const auto row = std::find(ct.values.begin(), ct.values.end(), data.ibr[j].values);
      if (row == ct.values.end()) throw InternalError("char0_simples: realized character is not in the table");
      auto& slot = module_of_row[static_cast<std::size_t>(row - ct.values.begin())];
      if (slot >= 0) throw InternalError("char0_simples: two realizations of one character");
      slot = static_cast<long>(j);
    }
    for (std::size_t row = 0; row < ct.size(); ++row) {
      if (module_of_row[row] < 0) throw InternalError("char0_simples: character without a realization");
      out.modules.push_back(induce(h, od, q, data.irreducibles[static_cast<std::size_t>(module_of_row[row])], row));
      out.characters.push_back(character_of(h, od, q, ct, row));
    }
  }
  return out;
}

ModularSimples modular_simples(const Bismash& h, unsigned p, std::uint64_t seed) {
  if (p == 2 || !nt::is_prime(p)) throw InvalidArgument("modular_simples: p must be an odd prime");
  ModularSimples out;
  out.p = p;
  out.field = build_field(p, splitting_degree(h.f(), p));
  out.orbits = orbit_data(h);
  for (std::size_t q = 0; q < out.orbits.size(); ++q) {
    const auto& od = out.orbits[q];
    out.groups.push_back(modular_data(od.stabilizer, p, seed, out.field));
    const auto& data = out.groups.back();
    for (std::size_t j = 0; j < data.irreducibles.size(); ++j) {
      out.modules.push_back(induce(h, od, q, data.irreducibles[j], j));
      out.characters.push_back(brauer_character_of(h, od, q, data, j));
    }
  }
  return out;
}

HElem<Rational> indicator_element(const Bismash& h) {
  return h_multiply_legs(h, h_comultiply(h, integral(h)));
}

int indicator_char0(const Bismash& h, const HCharacter& chi) {
  Cyc nu(0);
  for (const auto& [w, c] : indicator_element(h)) nu += Cyc(c) * chi.values[h.index(w)];
  if (nu == Cyc(1)) return 1;
  if (nu == Cyc(-1)) return -1;
  if (nu.is_zero()) return 0;
  throw InternalError("indicator_char0: value " + nu.to_string() + " is not in {-1, 0, 1}");
}

int indicator_modular(const Bismash& h, const InducedModule& m) {
  const FieldPtr& field = m.base.field;
  const GaloisField& f = *field;
  const std::size_t n = m.dim;
  const std::size_t nn = n * n;
  using Pairs = std::vector<std::pair<FFMatrix, FFMatrix>>;

  // Σ ρ(h_1)^T B ρ(h_2) = ε(h) B, as rows over the n^2 entries of B.
  std::vector<FFVector> rows;
  auto impose = [&](const Pairs& pairs, int eps) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FFVector row(nn, 0);
        for (const auto& [a, b] : pairs)
          for (std::size_t k = 0; k < n; ++k) {
            if (a(k, i) == 0) continue;
            for (std::size_t l = 0; l < n; ++l)
              row[k * n + l] = f.add(row[k * n + l], f.mul(a(k, i), b(l, j)));
          }
        if (eps) row[i * n + j] = f.sub(row[i * n + j], 1);
        rows.push_back(std::move(row));
      }
  };
  auto rho = [&](BasisElem w) -> const FFMatrix& { return m.rho[h.index(w)]; };

  for (std::size_t y = 0; y < h.g().order(); ++y) {
    Pairs pairs;
    for (const auto& [l, r] : h.comultiply({y, 0})) pairs.emplace_back(rho(l), rho(r));
    impose(pairs, y == 0);
  }
  std::map<std::size_t, FFMatrix> group_like;  // ρ(1 # b)
  auto one_sharp = [&](std::size_t b) -> const FFMatrix& {
    auto it = group_like.find(b);
    if (it == group_like.end()) {
      FFMatrix s(field, n, n);
      for (std::size_t u = 0; u < h.g().order(); ++u) s = s + rho({u, b});
      it = group_like.emplace(b, std::move(s)).first;
    }
    return it->second;
  };
  for (const auto& gen : h.f().generators()) {
    const std::size_t a = h.f().index_of(gen);
    Pairs pairs;
    for (std::size_t v = 0; v < h.g().order(); ++v)
      pairs.emplace_back(one_sharp(h.factored().rhd(v, a)), rho({v, a}));
    impose(pairs, 1);
  }
  FFMatrix system(field, rows.size(), nn);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < nn; ++c) system(r, c) = rows[r][c];
  const FFMatrix forms = nullspace(system);

  auto as_matrix = [&](std::size_t r) {
    FFMatrix b(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = forms(r, i * n + j);
    return b;
  };
  for (std::size_t r = 0; r < forms.rows(); ++r) {
    const FFMatrix b = as_matrix(r);
    for (const auto& w : h.basis()) {
      FFMatrix s(field, n, n);
      for (const auto& [l, rr] : h.comultiply(w)) s = s + transpose(rho(l)) * b * rho(rr);
      if (!(s == (h.counit(w) ? b : FFMatrix(field, n, n))))
        throw InternalError("indicator_modular: form is not invariant under " + h.label(w));
    }
  }
  if (forms.rows() == 0) return 0;
  if (forms.rows() > 1)
    throw InvalidArgument("indicator_modular: " + std::to_string(forms.rows()) +
                          " independent invariant forms; module not simple or field not splitting");
  const FFMatrix b = as_matrix(0);
  if (rank(b) != n) throw InternalError("indicator_modular: invariant form is degenerate");
  const FFMatrix bt = transpose(b);
  if (bt == b) return 1;
  if (bt == scale(b, f.neg(1))) return -1;
  throw InternalError("indicator_modular: invariant form is neither symmetric nor skew");
}

bool is_self_dual(const Bismash& h, const HCharacter& chi) { return dual_character(h, chi).values == chi.values; }

bool is_self_dual(const Bismash& h, const BrauerHCharacter& phi) {
  return dual_character(h, phi).values == phi.values;
}

bool hfactor_check(const Bismash& h, const InducedModule& m, BasisElem w, unsigned p) {
  if (!h.in_bprime(w)) throw InvalidArgument("hfactor_check: " + h.label(w) + " is not in B'");
  const auto parts = p_parts(h.f().element(w.a), p);
  const std::size_t s = h.f().index_of(parts.regular);
  return charpoly(m.rho[h.index(w)]) == charpoly(m.rho[h.index({w.y, s})]);
}

IndependenceCertificate h_brauer_independence(const std::vector<BrauerHCharacter>& ibr) {
  ExactMatrix<Cyc> rows;
  for (const auto& phi : ibr) rows.push_back(phi.values);
  return IndependenceCertificate{ibr.size(), exact_rank(rows)};
}

HDecomposition h_decomposition(const Bismash& h, const CharZeroSimples& ord, const ModularSimples& mod) {
  if (mod.characters.empty()) throw InvalidArgument("h_decomposition: no modular characters");
  HDecomposition out;
  const auto& domain = mod.characters[0].domain;
  ExactMatrix<Cyc> phi;
  for (const auto& c : mod.characters) {
    if (c.domain != domain) throw InvalidArgument("h_decomposition: Brauer characters on different domains");
    phi.push_back(c.values);
    out.col_orbit.push_back(c.orbit);
  }
  for (const auto& chi : ord.characters) {
    std::vector<Cyc> restricted;
    for (const auto& w : domain) restricted.push_back(chi.values[h.index(w)]);
    const auto sol = solve_rational_combination(phi, restricted);
    if (!sol) throw InvalidArgument("h_decomposition: restriction is not a combination of Brauer characters");
    std::vector<long long> row;
    for (const auto& x : *sol) {
      if (x.get_den() != 1 || x < 0) throw InvalidArgument("h_decomposition: non-integral or negative entry");
      row.push_back(x.get_num().get_si());
    }
    out.d.push_back(std::move(row));
    out.row_orbit.push_back(chi.orbit);
  }

  IntMatrix blocks(out.d.size(), std::vector<long long>(phi.size(), 0));
  for (std::size_t q = 0; q < ord.orbits.size(); ++q) {
    const IntMatrix dq = decomposition_matrix(ord.tables[q], mod.groups[q].ibr, mod.p);
    std::vector<std::size_t> rows_q, cols_q;
    for (std::size_t i = 0; i < ord.characters.size(); ++i)
      if (ord.characters[i].orbit == q) rows_q.push_back(i);
    for (std::size_t j = 0; j < mod.characters.size(); ++j)
      if (mod.characters[j].orbit == q) cols_q.push_back(j);
    if (rows_q.size() != dq.size()) throw InternalError("h_decomposition: block size mismatch");
    for (std::size_t i = 0; i < rows_q.size(); ++i) {
      if (dq[i].size() != cols_q.size()) throw InternalError("h_decomposition: block size mismatch");
      for (std::size_t j = 0; j < cols_q.size(); ++j)
        blocks[rows_q[i]][cols_q[j]] = dq[ord.characters[rows_q[i]].irr][mod.characters[cols_q[j]].irr];
    }
  }
  out.paths_agree = blocks == out.d;
  out.block_diagonal = true;
  for (std::size_t i = 0; i < out.d.size(); ++i)
    for (std::size_t j = 0; j < out.d[i].size(); ++j)
      if (out.row_orbit[i] != out.col_orbit[j] && out.d[i][j] != 0) out.block_diagonal = false;
  out.cartan = cartan(out.d, mod.p);
  return out;
}

}  // namespace hopfbrauer
