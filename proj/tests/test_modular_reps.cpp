#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/modular_reps.hpp"
#include "int_reps.hpp"

using namespace hopfbrauer;
using namespace hopfbrauer::testing;

namespace {

std::shared_ptr<const PermGroup> share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

FFMatrix random_invertible(const FieldPtr& field, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, field->size() - 1);
  for (;;) {
    FFMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (inverse(m)) return m;
  }
}

FFModule conjugate(const FFModule& m, const FFMatrix& x) {
  const FFMatrix xi = *inverse(x);
  std::vector<FFMatrix> gens;
  for (const auto& a : m.gens) gens.push_back(x * a * xi);
  return make_module(m.field, m.dim, gens);
}

std::size_t total_dim(const std::vector<ChopFactor>& fs) {
  std::size_t s = 0;
  for (const auto& f : fs) s += f.module.dim * f.multiplicity;
  return s;
}

}  // namespace

TEST_CASE("pairing map is a homomorphism onto S3") {
  const auto s4 = symmetric_group(4);
  std::set<Perm> image;
  for (const auto& a : s4.elements()) {
    image.insert(on_pairings(a));
    for (const auto& b : s4.elements()) CHECK(on_pairings(a * b) == on_pairings(a) * on_pairings(b));
  }
  CHECK(image.size() == 6);
}

TEST_CASE("cyclic group of order 3 over GF(7)") {
  const auto c3 = cyclic_group(3);
  const auto field = build_field(7, 1);
  const auto factors = chop(regular_module(c3, field));
  REQUIRE(factors.size() == 3);
  std::set<GaloisField::Elem> eigen;
  for (const auto& f : factors) {
    CHECK(f.module.dim == 1);
    CHECK(f.multiplicity == 1);
    eigen.insert(f.module.gens[0](0, 0));
  }
  CHECK(eigen == std::set<GaloisField::Elem>{1, 2, 4});
}

TEST_CASE("small symmetric groups in characteristic 3") {
  const auto field = build_field(3, 1);
  const auto s2 = symmetric_group(2);
  auto factors = chop(regular_module(s2, field));
  REQUIRE(factors.size() == 2);
  std::set<GaloisField::Elem> signs;
  for (const auto& f : factors) signs.insert(f.module.gens[0](0, 0));
  CHECK(signs == std::set<GaloisField::Elem>{1, 2});

  const auto s3 = symmetric_group(3);
  factors = chop(regular_module(s3, field));
  REQUIRE(factors.size() == 2);
  for (const auto& f : factors) {
    CHECK(f.module.dim == 1);
    CHECK(f.multiplicity == 3);
    CHECK(is_irreducible(f.module));
  }
  CHECK(!is_isomorphic(factors[0].module, factors[1].module));
}

TEST_CASE("chop preserves dimension and finds irreducibles") {
  for (unsigned p : {3u, 5u, 7u}) {
    const auto s4 = symmetric_group(4);
    const auto field = build_field(p, splitting_degree(s4, p));
    const auto factors = chop(regular_module(s4, field), 11);
    CHECK(total_dim(factors) == 24);
    for (const auto& f : factors) CHECK(is_irreducible(f.module, 3));
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j)
        CHECK(!is_isomorphic(factors[i].module, factors[j].module));
  }
}

TEST_CASE("isomorphism test") {
  const auto s4 = symmetric_group(4);
  const auto field = build_field(5, 1);
  const auto std4 = reduce_rep(s4, field, standard);
  const auto twisted = reduce_rep(s4, field, [](const Perm& g) {
    auto m = standard(g);
    for (auto& row : m)
      for (auto& x : row) x *= sign(g);
    return m;
  });
  REQUIRE(is_irreducible(std4));
  REQUIRE(is_irreducible(twisted));
  CHECK(!is_isomorphic(std4, twisted));
  std::mt19937 rng(5);
  for (int k = 0; k < 5; ++k) {
    const auto x = random_invertible(field, 3, rng);
    CHECK(is_isomorphic(std4, conjugate(std4, x)));
    CHECK(is_isomorphic(twisted, conjugate(twisted, x)));
    CHECK(!is_isomorphic(std4, conjugate(twisted, x)));
  }
  const auto perm4 = make_module(field, 4, [&] {
    std::vector<FFMatrix> gens;
    for (const auto& s : s4.generators()) {
      FFMatrix m(field, 4, 4);
      for (std::size_t i = 0; i < 4; ++i) m(s[i], i) = 1;
      gens.push_back(m);
    }
    return gens;
  }());
  CHECK(!is_irreducible(perm4));
  CHECK_THROWS_AS(is_isomorphic(perm4, perm4), InvalidArgument);
}

TEST_CASE("element matrices") {
  const auto s3 = symmetric_group(3);
  const auto field = build_field(7, 1);
  const auto m = reduce_rep(s3, field, standard);
  const auto mats = element_matrices(s3, m);
  for (std::size_t a = 0; a < s3.order(); ++a) {
    CHECK(mats[a] == reduce_rep(enumerate({s3.element(a)}, 3), field, standard).gens.at(0));
    for (std::size_t b = 0; b < s3.order(); ++b) CHECK(mats[s3.multiply(a, b)] == mats[a] * mats[b]);
  }
  auto bad = m;
  bad.gens[0] = FFMatrix::identity(field, 2);
  bad.gens[0](0, 1) = 1;
  CHECK_THROWS_AS(element_matrices(s3, bad), InvalidArgument);
}

TEST_CASE("number of irreducibles equals number of p-regular classes") {
  const std::vector<std::shared_ptr<const PermGroup>> groups = {
      share(symmetric_group(3)), share(symmetric_group(4)), share(cyclic_group(6)),
      share(enumerate({Perm::parse("(1 2 3)", 4), Perm::parse("(2 3 4)", 4)}, 4)),
      share(enumerate({Perm::parse("(1 2 3 4 5)", 5), Perm::parse("(2 5)(3 4)", 5)}, 5))};
  for (const auto& g : groups)
    for (unsigned p : {3u, 5u, 7u}) {
      const auto data = modular_data(g, p);
      const auto cc = conjugacy_classes(*g);
      CHECK(data.irreducibles.size() == p_regular_classes(*g, cc, p).size());
      std::size_t sum = 0;
      for (std::size_t j = 0; j < data.irreducibles.size(); ++j) {
        CHECK(data.ibr[j].degree() == data.irreducibles[j].dim);
        sum += data.irreducibles[j].dim * data.regular_multiplicities[j];
      }
      CHECK(sum == g->order());
    }
}

TEST_CASE("seed independence") {
  const auto s4 = share(symmetric_group(4));
  const auto base = modular_data(s4, 3, 0);
  for (std::uint64_t seed : {1ull, 2ull, 99ull, 123456789ull}) {
    const auto other = modular_data(s4, 3, seed);
    REQUIRE(other.ibr.size() == base.ibr.size());
    for (std::size_t j = 0; j < base.ibr.size(); ++j) {
      CHECK(other.ibr[j].values == base.ibr[j].values);
      CHECK(is_isomorphic(other.irreducibles[j], base.irreducibles[j]));
    }
  }
}

TEST_CASE("S3 modulo 3") {
  const auto s3 = share(symmetric_group(3));
  const auto ct = character_table(s3);
  const auto data = modular_data(s3, 3);
  REQUIRE(data.ibr.size() == 2);
  const auto d = decomposition_matrix(ct, data.ibr, 3);
  CHECK(d == IntMatrix{{1, 0}, {0, 1}, {1, 1}});
  const auto c = cartan(d, 3);
  CHECK(c.matrix == IntMatrix{{2, 1}, {1, 2}});
  CHECK(c.determinant == 3);
  CHECK(c.is_p_power);
  CHECK(c.exponent == 1);
}

TEST_CASE("S4 modulo 3") {
  const auto s4 = share(symmetric_group(4));
  const auto ct = character_table(s4);
  const auto data = modular_data(s4, 3);
  REQUIRE(data.ibr.size() == 4);
  const auto d = decomposition_matrix(ct, data.ibr, 3);
  CHECK(d == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const auto c = cartan(d, 3);
  CHECK(c.determinant == 3);
  CHECK(c.is_p_power);
}

TEST_CASE("coprime characteristic gives the identity decomposition matrix") {
  for (auto g : {share(symmetric_group(3)), share(symmetric_group(4))}) {
    const auto ct = character_table(g);
    const auto data = modular_data(g, 5);
    const auto d = decomposition_matrix(ct, data.ibr, 5);
    IntMatrix id(ct.size(), std::vector<long long>(ct.size(), 0));
    for (std::size_t i = 0; i < ct.size(); ++i) id[i][i] = 1;
    CHECK(d == id);
    const auto c = cartan(d, 5);
    CHECK(c.determinant == 1);
    CHECK(c.is_p_power);
    CHECK(c.exponent == 0);
  }
}

TEST_CASE("decomposition matrices against reduced integral representations") {
  const auto s4 = share(symmetric_group(4));
  const auto ct = character_table(s4);
  const std::vector<IntRep> reps = {
      [](const Perm&) { return std::vector<std::vector<long>>{{1}}; },
      [](const Perm& g) { return std::vector<std::vector<long>>{{sign(g)}}; },
      [](const Perm& g) { return standard(on_pairings(g)); },
      standard,
      [](const Perm& g) {
        auto m = standard(g);
        for (auto& row : m)
          for (auto& x : row) x *= sign(g);
        return m;
      }};
  for (unsigned p : {3u, 5u, 7u}) {
    const auto data = modular_data(s4, p);
    const auto d = decomposition_matrix(ct, data.ibr, p);
    std::set<std::size_t> rows_seen;
    for (const auto& rep : reps) {
      const auto traces = class_traces(*s4, ct.classes, rep);
      const auto row = std::find(ct.values.begin(), ct.values.end(), traces);
      REQUIRE(row != ct.values.end());
      const std::size_t i = static_cast<std::size_t>(row - ct.values.begin());
      rows_seen.insert(i);
      std::vector<long long> expected(data.ibr.size(), 0);
      for (const auto& f : chop(reduce_rep(*s4, data.field, rep), 7))
        expected[match_irreducible(data, f.module)] += static_cast<long long>(f.multiplicity);
      CHECK(d[i] == expected);
    }
    CHECK(rows_seen.size() == 5);
  }
}

TEST_CASE("decomposition rejects incomplete IBr") {
  const auto s4 = share(symmetric_group(4));
  const auto ct = character_table(s4);
  auto data = modular_data(s4, 3);
  data.ibr.pop_back();
  CHECK_THROWS_AS(decomposition_matrix(ct, data.ibr, 3), InvalidArgument);
}

TEST_CASE("Brauer characters are additive over composition factors") {
  for (unsigned p : {3u, 5u}) {
    const auto s4 = share(symmetric_group(4));
    const auto data = modular_data(s4, p);
    const LiftContext lifts(data.field);
    const IntRep natural = [](const Perm& g) {
      std::vector<std::vector<long>> m(g.degree(), std::vector<long>(g.degree(), 0));
      for (std::size_t i = 0; i < g.degree(); ++i) m[g[i]][i] = 1;
      return m;
    };
    for (const auto& module : {regular_module(*s4, data.field), reduce_rep(*s4, data.field, natural)}) {
      const auto whole = group_brauer_character(*s4, data.classes, module, lifts);
      std::vector<Cyc> sum(whole.values.size(), Cyc(0));
      for (const auto& f : chop(module)) {
        const auto& phi = data.ibr[match_irreducible(data, f.module)];
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += Cyc(static_cast<long>(f.multiplicity)) * phi.values[k];
      }
      CHECK(whole.class_ids == data.regular_classes);
      CHECK(whole.values == sum);
    }
  }
}

TEST_CASE("Brauer characters reduce to traces") {
  for (unsigned p : {3u, 5u, 7u}) {
    const auto s4 = share(symmetric_group(4));
    const auto data = modular_data(s4, p);
    const LiftContext lifts(data.field);
    for (std::size_t j = 0; j < data.irreducibles.size(); ++j) {
      const auto mats = element_matrices(*s4, data.irreducibles[j]);
      const auto& phi = data.ibr[j];
      for (std::size_t k = 0; k < phi.class_ids.size(); ++k) {
        const auto x = data.classes.representatives[phi.class_ids[k]];
        const auto& lift = lifts.get(static_cast<unsigned>(s4->element_order(x)));
        CHECK(reduce(phi.values[k], lift) == trace(mats[x]));
      }
    }
  }
}
