#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfbrauer/cyclotomic.hpp"
#include "hopfbrauer/factored_group.hpp"

namespace hopfbrauer {

/// The basis element p_y # a, y in G and a in F (indices).
struct BasisElem {
  std::size_t y = 0;
  std::size_t a = 0;
  auto operator<=>(const BasisElem&) const = default;
};

/// Sparse linear combination of basis elements. Zero coefficients are never stored.
template <class K>
using HElem = std::map<BasisElem, K>;

template <class K>
using HTensor = std::map<std::pair<BasisElem, BasisElem>, K>;

/// Label of the coproduct formula, recorded in reports.
inline constexpr const char* kCoproductVariant = "standard";

/// Bismash product k^G # kF of an exactly factorized group Q = F G.
///
///   (p_x # a)(p_y # b) = δ_{y, x◁a} p_x # ab
///   Δ(p_x # a)         = Σ_{uv = x} (p_u # (v▷a)) ⊗ (p_v # a)
///   ε(p_x # a)         = δ_{x, 1}
///   S(p_x # a)         = p_{(x◁a)^-1} # (x▷a)^-1
class Bismash {
 public:
  explicit Bismash(std::shared_ptr<const FactoredGroup> fg);

  const FactoredGroup& factored() const { return *fg_; }
  std::shared_ptr<const FactoredGroup> factored_ptr() const { return fg_; }
  const PermGroup& f() const { return fg_->f(); }
  const PermGroup& g() const { return fg_->g(); }

  std::size_t dim() const { return g().order() * f().order(); }
  std::size_t index(BasisElem w) const { return w.y * f().order() + w.a; }
  BasisElem element(std::size_t i) const { return {i / f().order(), i % f().order()}; }
  std::vector<BasisElem> basis() const;

  std::optional<BasisElem> multiply(BasisElem u, BasisElem v) const;
  BasisElem antipode(BasisElem w) const;
  int counit(BasisElem w) const { return w.y == 0 ? 1 : 0; }
  std::vector<std::pair<BasisElem, BasisElem>> comultiply(BasisElem w) const;

  /// a ∈ F_y, i.e. w is not nilpotent.
  bool in_bprime(BasisElem w) const { return fg_->lhd(w.y, w.a) == w.y; }
  /// w ∈ 𝓑′ with a of order prime to p.
  bool in_bpprime(BasisElem w, unsigned p) const;

  /// "p[y]#a" with y and a in cycle notation.
  std::string label(BasisElem w) const;
  /// "(y;a)".
  std::string pair_label(BasisElem w) const;

  /// Orbits of F on G under ◁.
  const std::vector<Orbit>& orbits() const { return orbits_; }

 private:
  std::shared_ptr<const FactoredGroup> fg_;
  std::vector<Orbit> orbits_;
};

template <class K>
HElem<K> basis_element(BasisElem w, const K& c = K(1)) {
  return HElem<K>{{w, c}};
}

template <class K>
HElem<K> h_add(const HElem<K>& u, const HElem<K>& v) {
  HElem<K> out = u;
  for (const auto& [w, c] : v) {
    K s = out[w] + c;
    if (s == K(0))
      out.erase(w);
    else
      out[w] = s;
  }
  return out;
}

template <class K>
HElem<K> h_scale(const HElem<K>& u, const K& c) {
  HElem<K> out;
  if (c == K(0)) return out;
  for (const auto& [w, x] : u) out[w] = x * c;
  return out;
}

template <class K>
HElem<K> h_multiply(const Bismash& h, const HElem<K>& u, const HElem<K>& v) {
  HElem<K> out;
  for (const auto& [wu, cu] : u)
    for (const auto& [wv, cv] : v)
      if (auto w = h.multiply(wu, wv)) out = h_add(out, basis_element<K>(*w, K(cu * cv)));
  return out;
}

template <class K>
HElem<K> h_antipode(const Bismash& h, const HElem<K>& u) {
  HElem<K> out;
  for (const auto& [w, c] : u) out = h_add(out, basis_element<K>(h.antipode(w), c));
  return out;
}

template <class K>
K h_counit(const Bismash& h, const HElem<K>& u) {
  K s(0);
  for (const auto& [w, c] : u)
    if (h.counit(w)) s = s + c;
  return s;
}

template <class K>
HTensor<K> h_comultiply(const Bismash& h, const HElem<K>& u) {
  HTensor<K> out;
  for (const auto& [w, c] : u)
    for (const auto& t : h.comultiply(w)) {
      K s = out[t] + c;
      if (s == K(0))
        out.erase(t);
      else
        out[t] = s;
    }
  return out;
}

/// m ∘ Δ: Σ u_1 u_2.
template <class K>
HElem<K> h_multiply_legs(const Bismash& h, const HTensor<K>& t) {
  HElem<K> out;
  for (const auto& [legs, c] : t)
    if (auto w = h.multiply(legs.first, legs.second)) out = h_add(out, basis_element<K>(*w, c));
  return out;
}

/// Σ_x p_x # 1.
HElem<Rational> unit(const Bismash& h);

/// Λ = |F|^-1 Σ_a p_1 # a. In characteristic p it exists only when p ∤ |F|;
/// pass the characteristic to have that checked (InvalidArgument otherwise).
HElem<Rational> integral(const Bismash& h, unsigned characteristic = 0);

/// w^k by repeated multiplication and by the closed form p_y # a^k or 0.
/// Returns the product; throws InternalError if the two disagree.
std::optional<BasisElem> power_law_check(const Bismash& h, BasisElem w, unsigned k);

/// Left multiplication by w on the regular module, as a partial map on basis indices.
std::vector<std::optional<std::size_t>> left_regular(const Bismash& h, BasisElem w);

/// For w ∈ 𝓑′ with a of order m: L_w^{m+1} = L_w. For w ∉ 𝓑′: L_w^2 = 0.
bool regular_min_poly_check(const Bismash& h, BasisElem w);

struct BasisClassification {
  std::vector<BasisElem> bprime;
  std::vector<BasisElem> bpprime;
};
BasisClassification classify(const Bismash& h, unsigned p);

struct AxiomResult {
  std::string name;
  bool pass = false;
  std::size_t checked = 0;
};

/// Exhaustive Hopf axiom battery. `primes` drive the 𝓑_{p′} closure checks.
std::vector<AxiomResult> axiom_battery(const Bismash& h, const std::vector<unsigned>& primes = {});

}  // namespace hopfbrauer
