#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "hopfbrauer/brauer_lift.hpp"
#include "hopfbrauer/char_table.hpp"
#include "hopfbrauer/ff_matrix.hpp"
#include "hopfbrauer/perm_group.hpp"

namespace hopfbrauer {

/// A module given by the matrices of a generating set of the acting algebra.
/// Matrices act on column vectors. For group modules the matrices follow the
/// order of PermGroup::generators().
struct FFModule {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<FFMatrix> gens;
};

FFModule make_module(FieldPtr field, std::size_t dim, std::vector<FFMatrix> gens);

/// Left regular module: g e_h = e_{gh}.
FFModule regular_module(const PermGroup& g, const FieldPtr& field);

/// ρ(x) for every element, indexed like g.elements(). Checks ρ(gh) = ρ(g)ρ(h)
/// on the generators, i.e. that the matrices define a representation.
std::vector<FFMatrix> element_matrices(const PermGroup& g, const FFModule& m);

/// Composition factors up to isomorphism.
struct ChopFactor {
  FFModule module;
  std::size_t multiplicity = 0;
};

/// Randomized MeatAxe. Deterministic for a given seed.
std::vector<ChopFactor> chop(const FFModule& m, std::uint64_t seed = 0);
bool is_irreducible(const FFModule& m, std::uint64_t seed = 0);
/// Throws InvalidArgument unless both modules are irreducible.
bool is_isomorphic(const FFModule& a, const FFModule& b);

/// Submodule spanned by the images of v, as a semi-echelon basis.
EchelonBasis spin(const FFVector& v, const std::vector<FFMatrix>& gens);

/// Lifts for all m dividing q - 1 over one field, built on demand.
class LiftContext {
 public:
  explicit LiftContext(FieldPtr field) : field_(std::move(field)) {}
  const FieldPtr& field() const { return field_; }
  const BrauerLift& get(unsigned m) const;

 private:
  FieldPtr field_;
  mutable std::map<unsigned, BrauerLift> cache_;
};

/// Degree D with GF(p^D) containing the e-th roots of unity, e the p'-part of
/// exp(g). Such a field splits g.
unsigned splitting_degree(const PermGroup& g, unsigned p);

struct GroupBrauerCharacter {
  unsigned p = 0;
  std::vector<std::size_t> class_ids;  // p-regular classes
  std::vector<Cyc> values;
  std::size_t degree() const;
};

GroupBrauerCharacter group_brauer_character(const PermGroup& g, const ConjClasses& cc, const FFModule& m,
                                            const LiftContext& lifts);

/// IBr of a group from the chopped regular module.
struct ModularData {
  std::shared_ptr<const PermGroup> group;
  unsigned p = 0;
  FieldPtr field;
  ConjClasses classes;
  std::vector<std::size_t> regular_classes;
  /// Sorted by (dimension, Brauer character values).
  std::vector<FFModule> irreducibles;
  std::vector<GroupBrauerCharacter> ibr;
  /// Composition multiplicity of each irreducible in the regular module.
  std::vector<std::size_t> regular_multiplicities;
};

/// `field` defaults to GF(p^splitting_degree); a larger field may be passed
/// to share one field among several groups.
ModularData modular_data(std::shared_ptr<const PermGroup> group, unsigned p, std::uint64_t seed = 0,
                         FieldPtr field = nullptr);

/// Index of the irreducible in `data` isomorphic to m.
std::size_t match_irreducible(const ModularData& data, const FFModule& m);

using IntMatrix = std::vector<std::vector<long long>>;

/// Unique nonnegative integer solution of χ_i|_{p'} = Σ_j d_ij φ_j.
/// Throws InvalidArgument if ibr is incomplete or the solution is not a
/// nonnegative integer matrix.
IntMatrix decomposition_matrix(const CharTable& ct, const std::vector<GroupBrauerCharacter>& ibr, unsigned p);

struct CartanCertificate {
  IntMatrix matrix;
  Integer determinant;
  unsigned p = 0;
  bool is_p_power = false;
  unsigned exponent = 0;
};

CartanCertificate cartan(const IntMatrix& d, unsigned p);

}  // namespace hopfbrauer
