#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "hopfbrauer/bismash.hpp"
#include "hopfbrauer/char_table.hpp"
#include "hopfbrauer/modular_reps.hpp"

namespace hopfbrauer {

/// An orbit of ◁ with its stabilizer as a group in its own right.
struct OrbitData {
  Orbit orbit;
  std::size_t rep = 0;  // x, a G index
  std::shared_ptr<const PermGroup> stabilizer;
  std::vector<std::size_t> to_f;  // F_x index -> F index
  std::vector<long> from_f;       // F index -> F_x index, or -1

  /// Position of an orbit point in orbit.points, or -1.
  long slot(std::size_t y) const;
};

std::vector<OrbitData> orbit_data(const Bismash& h);

/// kF ⊗_{kF_x} V_x. Basis t ⊗ e_i ordered by (transversal slot, i).
struct InducedModule {
  std::size_t orbit = 0;
  std::size_t irr = 0;
  FFModule base;  // generators follow stabilizer->generators()
  std::size_t dim = 0;
  std::vector<FFMatrix> rho;  // ρ(w) for every basis element, by Bismash::index
};

/// Builds all ρ(w) and checks that they define an H-module (exhaustively on
/// basis pairs, plus the unit). Throws InternalError on failure.
InducedModule induce(const Bismash& h, const OrbitData& od, std::size_t orbit, const FFModule& base,
                     std::size_t irr = 0);

/// Values on all of 𝓑, indexed by Bismash::index.
struct HCharacter {
  std::size_t orbit = 0;
  std::size_t irr = 0;
  std::vector<Cyc> values;
};

/// Values on 𝓑_{p′}, in the order of `domain`.
struct BrauerHCharacter {
  std::size_t orbit = 0;
  std::size_t irr = 0;
  unsigned p = 0;
  std::vector<BasisElem> domain;
  std::vector<Cyc> values;
};

/// Σ_{t ∈ T_x, t^-1 a t ∈ F_x} δ_{y◁t, x} χ(t^-1 a t) for a class function χ
/// of F_x given by its value at each F_x element.
Cyc induced_value(const Bismash& h, const OrbitData& od, BasisElem w, const std::vector<Cyc>& chi_on_elements);

HCharacter character_of(const Bismash& h, const OrbitData& od, std::size_t orbit, const CharTable& ct,
                        std::size_t row);
BrauerHCharacter brauer_character_of(const Bismash& h, const OrbitData& od, std::size_t orbit,
                                     const ModularData& data, std::size_t irr);

/// χ∘S.
HCharacter dual_character(const Bismash& h, const HCharacter& chi);
BrauerHCharacter dual_character(const Bismash& h, const BrauerHCharacter& phi);

/// Character of an explicit module with eigenvalues lifted through `lifts`:
/// on 𝓑′ by lifted_trace, elsewhere 0 after checking ρ(w)^2 = 0.
HCharacter trace_character(const Bismash& h, const InducedModule& m, const LiftContext& lifts);
/// Brauer character of an explicit module on 𝓑_{p′}, from its matrices.
BrauerHCharacter trace_brauer_character(const Bismash& h, const InducedModule& m, const LiftContext& lifts);

/// Simple H-modules over C, realized over a prime field GF(q0) with
/// q0 ≡ 1 mod exp(F) and q0 > |F|. Ordered by (orbit, row of the F_x table).
struct CharZeroSimples {
  FieldPtr field;
  std::vector<OrbitData> orbits;
  std::vector<CharTable> tables;  // per orbit
  std::vector<InducedModule> modules;
  std::vector<HCharacter> characters;
};
CharZeroSimples char0_simples(const Bismash& h, std::uint64_t seed = 0);

/// Simple H-modules over GF(p^D), D large enough to split every F_x.
/// Ordered by (orbit, IBr index of F_x).
struct ModularSimples {
  unsigned p = 0;
  FieldPtr field;
  std::vector<OrbitData> orbits;
  std::vector<ModularData> groups;  // per orbit
  std::vector<InducedModule> modules;
  std::vector<BrauerHCharacter> characters;
};
/// Throws InvalidArgument for p = 2 or p not prime.
ModularSimples modular_simples(const Bismash& h, unsigned p, std::uint64_t seed = 0);

/// m∘Δ(Λ) = Σ Λ_1 Λ_2.
HElem<Rational> indicator_element(const Bismash& h);
/// χ(Λ_1 Λ_2). Throws InternalError if the value is not -1, 0 or 1.
int indicator_char0(const Bismash& h, const HCharacter& chi);
/// Sign of a nonzero H-invariant bilinear form, 0 if there is none.
/// Throws InvalidArgument if the invariant forms are more than one-dimensional.
int indicator_modular(const Bismash& h, const InducedModule& m);

bool is_self_dual(const Bismash& h, const HCharacter& chi);
bool is_self_dual(const Bismash& h, const BrauerHCharacter& phi);

/// ρ(p_y#a) and ρ(p_y#s) have the same characteristic polynomial, s the
/// p'-part of a. Requires w ∈ 𝓑′.
bool hfactor_check(const Bismash& h, const InducedModule& m, BasisElem w, unsigned p);

struct IndependenceCertificate {
  std::size_t count = 0;
  std::size_t rank = 0;
  bool independent() const { return rank == count; }
};
IndependenceCertificate h_brauer_independence(const std::vector<BrauerHCharacter>& ibr);

struct HDecomposition {
  IntMatrix d;            // rows: ordinary simples, columns: modular simples
  std::vector<std::size_t> row_orbit;
  std::vector<std::size_t> col_orbit;
  bool paths_agree = false;     // restriction solve vs. group decomposition matrices
  bool block_diagonal = false;
  CartanCertificate cartan;
};
/// Both lists ordered by orbit. Throws InvalidArgument if a restriction is
/// not a nonnegative integral combination.
HDecomposition h_decomposition(const Bismash& h, const CharZeroSimples& ord, const ModularSimples& mod);

}  // namespace hopfbrauer
