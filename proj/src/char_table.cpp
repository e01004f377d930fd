#include "hopfbrauer/char_table.hpp"

#include <algorithm>
#include <cmath>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/ff_matrix.hpp"
#include "hopfbrauer/finite_field.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

namespace {

using Elem = GaloisField::Elem;

/// (M_j)_{ik} = #{x in C_j : x^-1 g_k in C_i}, reduced mod q.
std::vector<FFMatrix> class_matrices(const PermGroup& g, const ConjClasses& cc, const FieldPtr& field) {
  const std::size_t r = cc.count();
  std::vector<FFMatrix> mats;
  mats.reserve(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::vector<std::uint64_t>> counts(r, std::vector<std::uint64_t>(r, 0));
    for (std::size_t k = 0; k < r; ++k)
      for (auto x : cc.members[j]) ++counts[cc.class_of[g.multiply(g.inverse(x), cc.representatives[k])]][k];
    FFMatrix m(field, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) m(i, k) = field->from_int(static_cast<long long>(counts[i][k]));
    mats.push_back(std::move(m));
  }
  return mats;
}

/// Splits `space` into eigenspaces of `m` restricted to it.
std::vector<EchelonBasis> split_space(const EchelonBasis& space, const FFMatrix& m) {
  const auto& field = space.field();
  const GaloisField& f = *field;
  const std::size_t k = space.size();
  FFMatrix restricted(field, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    FFVector image = apply(m, space.rows()[i]);
    const FFVector coeffs = space.reduce(image);
    if (!std::all_of(image.begin(), image.end(), [](Elem e) { return e == 0; }))
      throw InternalError("character_table: subspace not invariant under a class matrix");
    for (std::size_t l = 0; l < k; ++l) restricted(l, i) = coeffs[l];
  }
  std::vector<EchelonBasis> parts;
  for (const auto& factor : ffpoly::irreducible_factors(f, charpoly(restricted))) {
    if (factor.size() != 2) throw InternalError("character_table: class matrix not split over GF(q)");
    const Elem lambda = f.neg(factor[0]);
    const FFMatrix kernel = nullspace(restricted - FFMatrix::scalar(field, k, lambda));
    EchelonBasis part(field, space.dim());
    for (std::size_t row = 0; row < kernel.rows(); ++row) {
      FFVector v(space.dim(), 0);
      for (std::size_t l = 0; l < k; ++l) {
        const Elem c = kernel(row, l);
        if (c == 0) continue;
        for (std::size_t t = 0; t < space.dim(); ++t) v[t] = f.add(v[t], f.mul(c, space.rows()[l][t]));
      }
      part.add(std::move(v));
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

CharTable character_table(std::shared_ptr<const PermGroup> group) {
  const PermGroup& g = *group;
  CharTable ct;
  ct.group = group;
  ct.classes = conjugacy_classes(g);
  const ConjClasses& cc = ct.classes;
  const std::size_t r = cc.count();
  const std::uint64_t order = g.order();
  const unsigned e = static_cast<unsigned>(g.exponent());

  const std::size_t max_class = *std::max_element(cc.sizes.begin(), cc.sizes.end());
  const auto bound = static_cast<unsigned>(std::ceil(2.0 * std::sqrt(static_cast<double>(order)) * max_class));
  const unsigned q = next_prime_congruent_one(e, bound);
  ct.modulus_prime = q;
  const FieldPtr field = build_field(q, 1);
  const GaloisField& f = *field;

  std::vector<EchelonBasis> spaces;
  {
    EchelonBasis all(field, r);
    for (std::size_t i = 0; i < r; ++i) {
      FFVector v(r, 0);
      v[i] = 1;
      all.add(std::move(v));
    }
    spaces.push_back(std::move(all));
  }
  const auto mats = class_matrices(g, cc, field);
  for (std::size_t j = 1; j < r && spaces.size() < r; ++j) {
    std::vector<EchelonBasis> next;
    for (const auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split_space(s, mats[j])) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InternalError("character_table: class algebra did not split");

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t i = 0; i < r; ++i) inverse_class[i] = cc.class_of[g.inverse(cc.representatives[i])];

  const Elem root_e = f.exp((q - 1) / e);
  struct Row {
    long degree;
    std::vector<Cyc> values;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    FFVector w = s.rows()[0];
    if (w[0] == 0) throw InternalError("character_table: eigenvector vanishes at the identity class");
    const Elem scale = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, scale);

    Elem sum = 0;
    for (std::size_t i = 0; i < r; ++i)
      sum = f.add(sum, f.div(f.mul(w[i], w[inverse_class[i]]), f.from_int(static_cast<long long>(cc.sizes[i]))));
    const Elem d2 = f.div(f.from_int(static_cast<long long>(order)), sum);
    long degree = 0;
    for (long d = 1; static_cast<std::uint64_t>(d * d) <= order; ++d)
      if (order % d == 0 && f.from_int(d * d) == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalError("character_table: no admissible degree");

    std::vector<Elem> theta(r);
    for (std::size_t i = 0; i < r; ++i)
      theta[i] = f.div(f.mul(w[i], f.from_int(degree)), f.from_int(static_cast<long long>(cc.sizes[i])));

    Row row{degree, std::vector<Cyc>(r)};
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t rep = cc.representatives[i];
      const unsigned o = static_cast<unsigned>(g.element_order(rep));
      const Elem z = f.pow(root_e, e / o);
      std::vector<Elem> along(o);  // θ(g^l)
      std::size_t power = 0;
      for (unsigned l = 0; l < o; ++l) {
        along[l] = theta[cc.class_of[power]];
        power = g.multiply(power, rep);
      }
      const Elem inv_o = f.inv(f.from_int(o));
      std::vector<long> mult(o);
      for (unsigned k = 0; k < o; ++k) {
        Elem acc = 0;
        for (unsigned l = 0; l < o; ++l)
          acc = f.add(acc, f.mul(along[l], f.pow(z, static_cast<std::uint64_t>((o - (k * l) % o) % o))));
        const Elem mk = f.mul(acc, inv_o);
        if (mk > static_cast<Elem>(degree)) throw InternalError("character_table: eigenvalue multiplicity out of range");
        mult[k] = static_cast<long>(mk);
      }
      row.values[i] = Cyc::from_multiplicities(o, mult).normalized();
      if (!row.values[i].is_integral()) throw InternalError("character_table: non-integral value");
    }
    if (row.values[0] != Cyc(degree)) throw InternalError("character_table: identity value differs from degree");
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end(),
                                        [](const Cyc& x, const Cyc& y) { return (x <=> y) < 0; });
  });
  std::uint64_t degree_squares = 0;
  for (auto& row : rows) {
    if (order % row.degree != 0) throw InternalError("character_table: degree does not divide |G|");
    degree_squares += static_cast<std::uint64_t>(row.degree * row.degree);
    ct.degrees.push_back(row.degree);
    ct.values.push_back(std::move(row.values));
  }
  if (degree_squares != order) throw InternalError("character_table: Σ degrees² != |G|");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      const Cyc ip = inner_product(ct, ct.values[a], ct.values[b]);
      if (ip != Cyc(a == b ? 1 : 0)) throw InternalError("character_table: row orthogonality fails");
    }
  return ct;
}

RestrictedTable restrict_to_p_regular(const CharTable& ct, unsigned p) {
  RestrictedTable out;
  out.class_ids = p_regular_classes(*ct.group, ct.classes, p);
  for (const auto& row : ct.values) {
    std::vector<Cyc> r;
    r.reserve(out.class_ids.size());
    for (auto c : out.class_ids) r.push_back(row[c]);
    out.values.push_back(std::move(r));
  }
  return out;
}

Cyc inner_product(const CharTable& ct, const std::vector<Cyc>& chi, const std::vector<Cyc>& psi) {
  Cyc sum(0);
  for (std::size_t c = 0; c < ct.classes.count(); ++c)
    sum += Cyc(static_cast<long>(ct.classes.sizes[c])) * chi[c] * psi[c].conj();
  return sum * Cyc(Rational(1, static_cast<long>(ct.group->order())));
}

}  // namespace hopfbrauer
