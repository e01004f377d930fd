#include "hopfbrauer/bismash.hpp"

#include <set>
#include <tuple>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

Bismash::Bismash(std::shared_ptr<const FactoredGroup> fg) : fg_(std::move(fg)), orbits_(lhd_orbits(*fg_)) {}

std::vector<BasisElem> Bismash::basis() const {
  std::vector<BasisElem> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

std::optional<BasisElem> Bismash::multiply(BasisElem u, BasisElem v) const {
  if (v.y != fg_->lhd(u.y, u.a)) return std::nullopt;
  return BasisElem{u.y, f().multiply(u.a, v.a)};
}

BasisElem Bismash::antipode(BasisElem w) const {
  return {g().inverse(fg_->lhd(w.y, w.a)), f().inverse(fg_->rhd(w.y, w.a))};
}

std::vector<std::pair<BasisElem, BasisElem>> Bismash::comultiply(BasisElem w) const {
  std::vector<std::pair<BasisElem, BasisElem>> out;
  out.reserve(g().order());
  for (std::size_t v = 0; v < g().order(); ++v) {
    const std::size_t u = g().multiply(w.y, g().inverse(v));
    out.push_back({BasisElem{u, fg_->rhd(v, w.a)}, BasisElem{v, w.a}});
  }
  return out;
}

bool Bismash::in_bpprime(BasisElem w, unsigned p) const {
  return in_bprime(w) && f().element_order(w.a) % p != 0;
}

std::string Bismash::label(BasisElem w) const {
  return "p[" + g().element(w.y).to_string() + "]#" + f().element(w.a).to_string();
}

std::string Bismash::pair_label(BasisElem w) const {
  return "(" + g().element(w.y).to_string() + ";" + f().element(w.a).to_string() + ")";
}

HElem<Rational> unit(const Bismash& h) {
  HElem<Rational> out;
  for (std::size_t y = 0; y < h.g().order(); ++y) out[{y, 0}] = 1;
  return out;
}

HElem<Rational> integral(const Bismash& h, unsigned characteristic) {
  const std::size_t nf = h.f().order();
  if (characteristic != 0 && nf % characteristic == 0)
    throw InvalidArgument("integral: p = " + std::to_string(characteristic) + " divides |F| = " + std::to_string(nf));
  HElem<Rational> out;
  for (std::size_t a = 0; a < nf; ++a) out[{0, a}] = Rational(1, static_cast<long>(nf));
  return out;
}

std::optional<BasisElem> power_law_check(const Bismash& h, BasisElem w, unsigned k) {
  std::optional<BasisElem> prod = w;
  for (unsigned i = 1; i < k && prod; ++i) prod = h.multiply(*prod, w);
  std::optional<BasisElem> closed;
  if (h.in_bprime(w)) {
    std::size_t ak = 0;
    for (unsigned i = 0; i < k; ++i) ak = h.f().multiply(ak, w.a);
    closed = BasisElem{w.y, ak};
  }
  if (prod != closed) throw InternalError("power law fails at " + h.label(w));
  return prod;
}

std::vector<std::optional<std::size_t>> left_regular(const Bismash& h, BasisElem w) {
  std::vector<std::optional<std::size_t>> out(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (auto v = h.multiply(w, h.element(i))) out[i] = h.index(*v);
  return out;
}

bool regular_min_poly_check(const Bismash& h, BasisElem w) {
  const auto l = left_regular(h, w);
  auto compose = [](const std::vector<std::optional<std::size_t>>& a, const std::vector<std::optional<std::size_t>>& b) {
    std::vector<std::optional<std::size_t>> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) out[i] = a[*b[i]];
    return out;
  };
  if (!h.in_bprime(w)) return compose(l, l) == std::vector<std::optional<std::size_t>>(h.dim());
  const std::size_t m = h.f().element_order(w.a);
  auto pw = l;
  for (std::size_t i = 0; i < m; ++i) pw = compose(l, pw);
  return pw == l;
}

BasisClassification classify(const Bismash& h, unsigned p) {
  BasisClassification c;
  for (const auto& w : h.basis()) {
    if (!h.in_bprime(w)) continue;
    c.bprime.push_back(w);
    if (h.in_bpprime(w, p)) c.bpprime.push_back(w);
  }
  return c;
}

namespace {

using Tensor = std::map<std::pair<std::size_t, std::size_t>, long>;

Tensor delta(const Bismash& h, BasisElem w) {
  Tensor t;
  for (const auto& [l, r] : h.comultiply(w)) ++t[{h.index(l), h.index(r)}];
  return t;
}

void erase_zeros(Tensor& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

std::vector<AxiomResult> axiom_battery(const Bismash& h, const std::vector<unsigned>& primes) {
  std::vector<AxiomResult> out;
  const auto basis = h.basis();
  const std::size_t n = basis.size();
  auto record = [&](std::string name, bool pass, std::size_t checked) {
    out.push_back(AxiomResult{std::move(name), pass, checked});
  };

  {
    bool ok = true;
    std::size_t c = 0;
    for (const auto& u : basis)
      for (const auto& v : basis)
        for (const auto& w : basis) {
          ++c;
          const auto uv = h.multiply(u, v);
          const auto vw = h.multiply(v, w);
          const auto left = uv ? h.multiply(*uv, w) : std::nullopt;
          const auto right = vw ? h.multiply(u, *vw) : std::nullopt;
          ok &= left == right;
        }
    record("associativity", ok, c);
  }
  {
    const auto one = unit(h);
    bool ok = true;
    for (const auto& w : basis) {
      const auto e = basis_element<Rational>(w);
      ok &= h_multiply(h, one, e) == e && h_multiply(h, e, one) == e;
    }
    record("unit", ok, n);
  }
  {
    bool ok = true;
    for (const auto& w : basis) {
      std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long> left, right;
      for (const auto& [a, b] : h.comultiply(w)) {
        for (const auto& [a1, a2] : h.comultiply(a)) ++left[{h.index(a1), h.index(a2), h.index(b)}];
        for (const auto& [b1, b2] : h.comultiply(b)) ++right[{h.index(a), h.index(b1), h.index(b2)}];
      }
      ok &= left == right;
    }
    record("coassociativity", ok, n);
  }
  {
    bool ok = true;
    for (const auto& w : basis) {
      HElem<Rational> left, right;
      for (const auto& [a, b] : h.comultiply(w)) {
        if (h.counit(a)) left = h_add(left, basis_element<Rational>(b));
        if (h.counit(b)) right = h_add(right, basis_element<Rational>(a));
      }
      ok &= left == basis_element<Rational>(w) && right == basis_element<Rational>(w);
    }
    record("counit", ok, n);
  }
  {
    bool ok = true;
    bool eps_ok = true;
    for (const auto& u : basis)
      for (const auto& v : basis) {
        const auto uv = h.multiply(u, v);
        Tensor lhs = uv ? delta(h, *uv) : Tensor{};
        Tensor rhs;
        for (const auto& [u1, u2] : h.comultiply(u))
          for (const auto& [v1, v2] : h.comultiply(v)) {
            const auto l = h.multiply(u1, v1);
            const auto r = h.multiply(u2, v2);
            if (l && r) ++rhs[{h.index(*l), h.index(*r)}];
          }
        erase_zeros(lhs);
        erase_zeros(rhs);
        ok &= lhs == rhs;
        eps_ok &= (uv ? h.counit(*uv) : 0) == h.counit(u) * h.counit(v);
      }
    record("comultiplication is multiplicative", ok, n * n);
    record("counit is multiplicative", eps_ok, n * n);
  }
  {
    Tensor d1;
    for (std::size_t y = 0; y < h.g().order(); ++y)
      for (const auto& [a, b] : h.comultiply({y, 0})) ++d1[{h.index(a), h.index(b)}];
    Tensor expected;
    for (std::size_t y = 0; y < h.g().order(); ++y)
      for (std::size_t z = 0; z < h.g().order(); ++z) expected[{h.index({y, 0}), h.index({z, 0})}] = 1;
    record("comultiplication is unital", d1 == expected, 1);
  }
  {
    bool ok = true;
    const auto one = unit(h);
    for (const auto& w : basis) {
      HElem<Rational> left, right;
      for (const auto& [a, b] : h.comultiply(w)) {
        if (auto x = h.multiply(h.antipode(a), b)) left = h_add(left, basis_element<Rational>(*x));
        if (auto x = h.multiply(a, h.antipode(b))) right = h_add(right, basis_element<Rational>(*x));
      }
      const auto expected = h.counit(w) ? one : HElem<Rational>{};
      ok &= left == expected && right == expected;
    }
    record("antipode axiom", ok, n);
  }
  {
    bool ok = true;
    for (const auto& w : basis) ok &= h.antipode(h.antipode(w)) == w;
    record("S^2 = id", ok, n);
  }
  {
    bool ok = true;
    for (const auto& u : basis)
      for (const auto& v : basis) {
        const auto uv = h.multiply(u, v);
        const auto lhs = uv ? std::optional<BasisElem>(h.antipode(*uv)) : std::nullopt;
        ok &= lhs == h.multiply(h.antipode(v), h.antipode(u));
      }
    record("S is an antihomomorphism", ok, n * n);
  }
  if (h.f().order() > 0) {
    const auto lambda = integral(h);
    bool ok = h_counit(h, lambda) == 1;
    for (const auto& w : basis) {
      const auto e = basis_element<Rational>(w);
      const auto expected = h.counit(w) ? lambda : HElem<Rational>{};
      ok &= h_multiply(h, e, lambda) == expected && h_multiply(h, lambda, e) == expected;
    }
    record("integral law", ok, n);
  }
  {
    bool ok = true;
    std::set<BasisElem> bprime;
    for (const auto& w : basis) {
      const bool non_nilpotent = h.multiply(w, w).has_value();
      ok &= non_nilpotent == h.in_bprime(w);
      if (h.in_bprime(w)) bprime.insert(w);
    }
    for (const auto& w : bprime) ok &= bprime.count(h.antipode(w)) == 1;
    for (auto p : primes)
      for (const auto& w : basis)
        ok &= h.in_bpprime(w, p) == h.in_bpprime(h.antipode(w), p);
    record("basis classification", ok, n * (1 + primes.size()));
  }
  {
    bool ok = true;
    for (const auto& w : basis) {
      if (!h.in_bprime(w)) continue;
      // S(w) = p_{y^-1} # y a^-1 y^-1 inside Q.
      const Perm& y = h.g().element(w.y);
      const Perm& a = h.f().element(w.a);
      const auto conj = h.f().find(y * a.pow(-1) * y.pow(-1));
      ok &= conj.has_value() && h.antipode(w) == BasisElem{h.g().inverse(w.y), *conj};
    }
    record("antipode on non-nilpotent basis", ok, n);
  }
  {
    bool ok = true;
    for (const auto& w : basis) {
      const unsigned m = static_cast<unsigned>(h.f().element_order(w.a));
      try {
        for (unsigned k = 2; k <= m + 1; ++k) power_law_check(h, w, k);
      } catch (const InternalError&) {
        ok = false;
      }
      ok &= regular_min_poly_check(h, w);
    }
    record("power law", ok, n);
  }
  return out;
}

}  // namespace hopfbrauer
