#include "hopfbrauer/modular_reps.hpp"

#include <algorithm>
#include <deque>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/exact_linalg.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

namespace {

using Rng = std::mt19937_64;
using Elem = GaloisField::Elem;

constexpr int kMeatAxeAttempts = 400;

FFMatrix random_algebra_element(const FFModule& m, Rng& rng) {
  const GaloisField& f = *m.field;
  std::uniform_int_distribution<std::uint32_t> any(0, f.size() - 1);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, f.size() - 1);
  FFMatrix acc = FFMatrix::scalar(m.field, m.dim, any(rng));
  if (m.gens.empty()) return acc;
  std::uniform_int_distribution<std::size_t> pick(0, m.gens.size() - 1);
  std::uniform_int_distribution<int> length(1, 3);
  std::uniform_int_distribution<int> terms(2, 4);
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    FFMatrix word = m.gens[pick(rng)];
    const int len = length(rng);
    for (int l = 1; l < len; ++l) word = word * m.gens[pick(rng)];
    acc = add_scaled(acc, word, nonzero(rng));
  }
  return acc;
}

FFVector matrix_row(const FFMatrix& a, std::size_t i) {
  auto r = a.row(i);
  return FFVector(r.begin(), r.end());
}

/// A proper nonzero submodule, or nullopt if the module is irreducible.
std::optional<EchelonBasis> find_submodule(const FFModule& m, Rng& rng) {
  if (m.dim <= 1) return std::nullopt;
  std::vector<FFMatrix> transposed;
  transposed.reserve(m.gens.size());
  for (const auto& g : m.gens) transposed.push_back(transpose(g));

  for (int attempt = 0; attempt < kMeatAxeAttempts; ++attempt) {
    const FFMatrix theta = random_algebra_element(m, rng);
    for (const auto& factor : ffpoly::irreducible_factors(*m.field, charpoly(theta))) {
      const FFMatrix f_theta = evaluate(factor, theta);
      const FFMatrix kernel = nullspace(f_theta);
      const std::size_t tries = std::min<std::size_t>(kernel.rows(), 2);
      for (std::size_t r = 0; r < tries; ++r) {
        EchelonBasis s = spin(matrix_row(kernel, r), m.gens);
        if (s.size() < m.dim) return s;
      }
      if (kernel.rows() != ffpoly::degree(factor)) continue;
      // Norton: test the dual module with the same polynomial.
      const FFMatrix dual_kernel = nullspace(transpose(f_theta));
      const EchelonBasis dual = spin(matrix_row(dual_kernel, 0), transposed);
      if (dual.size() == m.dim) return std::nullopt;
      const FFMatrix ann = nullspace(dual.as_matrix());
      EchelonBasis sub(m.field, m.dim);
      for (std::size_t r = 0; r < ann.rows(); ++r) sub.add(matrix_row(ann, r));
      return sub;
    }
  }
  throw InternalError("MeatAxe: no decision after " + std::to_string(kMeatAxeAttempts) + " random elements");
}

std::pair<FFModule, FFModule> split_module(const FFModule& m, const EchelonBasis& s) {
  const std::size_t k = s.size();
  const std::size_t n = m.dim;
  const auto np = s.non_pivots();
  FFModule sub{m.field, k, {}};
  FFModule quot{m.field, n - k, {}};
  for (const auto& a : m.gens) {
    FFMatrix ms(m.field, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      FFVector img = apply(a, s.rows()[i]);
      const FFVector coeffs = s.reduce(img);
      if (std::any_of(img.begin(), img.end(), [](Elem e) { return e != 0; }))
        throw InternalError("MeatAxe: spun subspace is not invariant");
      for (std::size_t l = 0; l < k; ++l) ms(l, i) = coeffs[l];
    }
    sub.gens.push_back(std::move(ms));
    FFMatrix mq(m.field, n - k, n - k);
    for (std::size_t c = 0; c < np.size(); ++c) {
      FFVector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = a(i, np[c]);
      s.reduce(col);
      for (std::size_t r = 0; r < np.size(); ++r) mq(r, c) = col[np[r]];
    }
    quot.gens.push_back(std::move(mq));
  }
  return {std::move(sub), std::move(quot)};
}

void composition_factors(const FFModule& m, Rng& rng, std::vector<FFModule>& out) {
  if (m.dim == 0) return;
  auto sub = find_submodule(m, rng);
  if (!sub) {
    out.push_back(m);
    return;
  }
  auto [s, q] = split_module(m, *sub);
  composition_factors(s, rng, out);
  composition_factors(q, rng, out);
}

bool same_char_polys(const FFModule& a, const FFModule& b) {
  for (std::size_t k = 0; k < a.gens.size(); ++k)
    if (charpoly(a.gens[k]) != charpoly(b.gens[k])) return false;
  return true;
}

/// dim Hom(a, b) > 0, by solving X A_k = B_k X.
bool has_nonzero_hom(const FFModule& a, const FFModule& b) {
  const std::size_t n = a.dim;
  const std::size_t nn = n * n;
  const GaloisField& f = *a.field;
  EchelonBasis equations(a.field, nn);
  for (std::size_t k = 0; k < a.gens.size(); ++k) {
    const FFMatrix& ak = a.gens[k];
    const FFMatrix& bk = b.gens[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FFVector row(nn, 0);
        for (std::size_t l = 0; l < n; ++l) {
          row[i * n + l] = f.add(row[i * n + l], ak(l, j));
          row[l * n + j] = f.sub(row[l * n + j], bk(i, l));
        }
        equations.add(std::move(row));
        if (equations.size() == nn) return false;
      }
  }
  return equations.size() < nn;
}

}  // namespace

FFModule make_module(FieldPtr field, std::size_t dim, std::vector<FFMatrix> gens) {
  for (const auto& g : gens)
    if (g.rows() != dim || g.cols() != dim || g.field() != field)
      throw InvalidArgument("make_module: generator matrix has the wrong shape or field");
  return FFModule{std::move(field), dim, std::move(gens)};
}

FFModule regular_module(const PermGroup& g, const FieldPtr& field) {
  const std::size_t n = g.order();
  std::vector<FFMatrix> gens;
  for (const auto& s : g.generators()) {
    const std::size_t si = g.index_of(s);
    FFMatrix m(field, n, n);
    for (std::size_t h = 0; h < n; ++h) m(g.multiply(si, h), h) = 1;
    gens.push_back(std::move(m));
  }
  return make_module(field, n, std::move(gens));
}

std::vector<FFMatrix> element_matrices(const PermGroup& g, const FFModule& m) {
  const auto& gens = g.generators();
  if (gens.size() != m.gens.size()) throw InvalidArgument("element_matrices: generator count mismatch");
  std::vector<std::size_t> gen_index;
  for (const auto& s : gens) gen_index.push_back(g.index_of(s));
  std::vector<std::optional<FFMatrix>> mats(g.order());
  mats[0] = FFMatrix::identity(m.field, m.dim);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t t = 0; t < gens.size(); ++t) {
      const std::size_t prod = g.multiply(gen_index[t], e);
      FFMatrix mp = m.gens[t] * *mats[e];
      if (!mats[prod]) {
        mats[prod] = std::move(mp);
        queue.push_back(prod);
      } else if (!(*mats[prod] == mp)) {
        throw InvalidArgument("element_matrices: matrices do not satisfy the group relations");
      }
    }
  }
  std::vector<FFMatrix> out;
  out.reserve(g.order());
  for (auto& mt : mats) {
    if (!mt) throw InternalError("element_matrices: generators do not reach every element");
    out.push_back(std::move(*mt));
  }
  return out;
}

EchelonBasis spin(const FFVector& v, const std::vector<FFMatrix>& gens) {
  if (gens.empty()) throw InvalidArgument("spin: no generators");
  EchelonBasis basis(gens[0].field(), v.size());
  basis.add(v);
  for (std::size_t i = 0; i < basis.size() && basis.size() < v.size(); ++i) {
    const FFVector cur = basis.rows()[i];
    for (const auto& g : gens) basis.add(apply(g, cur));
  }
  return basis;
}

std::vector<ChopFactor> chop(const FFModule& m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<FFModule> factors;
  if (m.gens.empty() && m.dim > 0) {
    // Only scalars act: every line is a submodule.
    FFModule one{m.field, 1, {}};
    return {ChopFactor{one, m.dim}};
  }
  composition_factors(m, rng, factors);
  std::vector<ChopFactor> out;
  for (auto& fac : factors) {
    bool found = false;
    for (auto& known : out)
      if (known.module.dim == fac.dim && same_char_polys(known.module, fac) && has_nonzero_hom(known.module, fac)) {
        ++known.multiplicity;
        found = true;
        break;
      }
    if (!found) out.push_back(ChopFactor{std::move(fac), 1});
  }
  return out;
}

bool is_irreducible(const FFModule& m, std::uint64_t seed) {
  if (m.gens.empty()) return m.dim == 1;
  Rng rng(seed);
  return !find_submodule(m, rng).has_value();
}

bool is_isomorphic(const FFModule& a, const FFModule& b) {
  if (a.field != b.field || a.gens.size() != b.gens.size())
    throw InvalidArgument("is_isomorphic: modules for different algebras");
  if (!is_irreducible(a) || !is_irreducible(b)) throw InvalidArgument("is_isomorphic: inputs must be irreducible");
  if (a.dim != b.dim) return false;
  if (!same_char_polys(a, b)) return false;
  return has_nonzero_hom(a, b);
}

const BrauerLift& LiftContext::get(unsigned m) const {
  auto it = cache_.find(m);
  if (it == cache_.end()) it = cache_.emplace(m, make_lift(field_, m)).first;
  return it->second;
}

unsigned splitting_degree(const PermGroup& g, unsigned p) {
  std::uint64_t e = g.exponent();
  while (e % p == 0) e /= p;
  return e == 1 ? 1u : static_cast<unsigned>(nt::multiplicative_order(p, e));
}

std::size_t GroupBrauerCharacter::degree() const {
  return static_cast<std::size_t>(values.at(0).to_rational().get_num().get_ui());
}

GroupBrauerCharacter group_brauer_character(const PermGroup& g, const ConjClasses& cc, const FFModule& m,
                                            const LiftContext& lifts) {
  GroupBrauerCharacter chi;
  chi.p = m.field->characteristic();
  chi.class_ids = p_regular_classes(g, cc, chi.p);
  const auto mats = element_matrices(g, m);
  for (auto c : chi.class_ids) {
    const std::size_t rep = cc.representatives[c];
    chi.values.push_back(brauer_value(mats[rep], lifts.get(static_cast<unsigned>(g.element_order(rep)))));
  }
  return chi;
}

ModularData modular_data(std::shared_ptr<const PermGroup> group, unsigned p, std::uint64_t seed, FieldPtr field) {
  ModularData data;
  data.group = group;
  data.p = p;
  const PermGroup& g = *group;
  if (!field) field = build_field(p, splitting_degree(g, p));
  if (field->characteristic() != p) throw InvalidArgument("modular_data: field characteristic differs from p");
  std::uint64_t e = g.exponent();
  while (e % p == 0) e /= p;
  if ((field->size() - 1) % e != 0) throw InvalidArgument("modular_data: field lacks the needed roots of unity");
  data.field = field;
  data.classes = conjugacy_classes(g);
  data.regular_classes = p_regular_classes(g, data.classes, p);

  const LiftContext lifts(field);
  struct Entry {
    FFModule module;
    GroupBrauerCharacter chi;
    std::size_t mult;
  };
  std::vector<Entry> entries;
  for (auto& fac : chop(regular_module(g, field), seed)) {
    auto chi = group_brauer_character(g, data.classes, fac.module, lifts);
    entries.push_back(Entry{std::move(fac.module), std::move(chi), fac.multiplicity});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.module.dim != b.module.dim) return a.module.dim < b.module.dim;
    return std::lexicographical_compare(a.chi.values.begin(), a.chi.values.end(), b.chi.values.begin(),
                                        b.chi.values.end(), [](const Cyc& x, const Cyc& y) { return (x <=> y) < 0; });
  });
  if (entries.size() != data.regular_classes.size())
    throw InternalError("modular_data: found " + std::to_string(entries.size()) + " irreducibles but " +
                        std::to_string(data.regular_classes.size()) + " p-regular classes");
  for (auto& en : entries) {
    data.irreducibles.push_back(std::move(en.module));
    data.ibr.push_back(std::move(en.chi));
    data.regular_multiplicities.push_back(en.mult);
  }
  return data;
}

std::size_t match_irreducible(const ModularData& data, const FFModule& m) {
  for (std::size_t i = 0; i < data.irreducibles.size(); ++i)
    if (data.irreducibles[i].dim == m.dim && is_isomorphic(data.irreducibles[i], m)) return i;
  throw InvalidArgument("match_irreducible: module is not isomorphic to a known irreducible");
}

IntMatrix decomposition_matrix(const CharTable& ct, const std::vector<GroupBrauerCharacter>& ibr, unsigned p) {
  const auto restricted = restrict_to_p_regular(ct, p);
  if (ibr.size() != restricted.class_ids.size())
    throw InvalidArgument("decomposition_matrix: IBr has " + std::to_string(ibr.size()) + " characters, expected " +
                          std::to_string(restricted.class_ids.size()));
  ExactMatrix<Cyc> phi;
  for (const auto& b : ibr) {
    if (b.class_ids != restricted.class_ids) throw InvalidArgument("decomposition_matrix: class mismatch");
    phi.push_back(b.values);
  }
  IntMatrix d;
  for (const auto& row : restricted.values) {
    auto sol = solve_rational_combination(phi, row);
    if (!sol) throw InvalidArgument("decomposition_matrix: restriction is not a combination of IBr");
    std::vector<long long> out;
    for (const auto& x : *sol) {
      if (x.get_den() != 1 || x < 0)
        throw InvalidArgument("decomposition_matrix: non-integral or negative decomposition number");
      out.push_back(x.get_num().get_si());
    }
    d.push_back(std::move(out));
  }
  return d;
}

CartanCertificate cartan(const IntMatrix& d, unsigned p) {
  CartanCertificate cert;
  cert.p = p;
  const std::size_t cols = d.empty() ? 0 : d[0].size();
  cert.matrix.assign(cols, std::vector<long long>(cols, 0));
  for (const auto& row : d)
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) cert.matrix[i][j] += row[i] * row[j];
  cert.determinant = integer_determinant(cert.matrix);
  if (cert.determinant > 0 && mpz_fits_ulong_p(cert.determinant.get_mpz_t())) {
    unsigned e = 0;
    cert.is_p_power = nt::is_power_of(cert.determinant.get_ui(), p, &e);
    cert.exponent = e;
  }
  return cert;
}

}  // namespace hopfbrauer
