#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hopfbrauer/cyclotomic.hpp"
#include "hopfbrauer/perm_group.hpp"

namespace hopfbrauer {

/// Ordinary character table. Rows are irreducible characters sorted by
/// (degree, values); columns follow the class order of `classes`.
struct CharTable {
  std::shared_ptr<const PermGroup> group;
  ConjClasses classes;
  std::vector<std::vector<Cyc>> values;
  std::vector<long> degrees;
  /// Prime field used for the class-algebra eigenvectors.
  unsigned modulus_prime = 0;

  std::size_t size() const { return values.size(); }
  /// χ_row at an arbitrary element index.
  const Cyc& at_element(std::size_t row, std::size_t element) const {
    return values[row][classes.class_of[element]];
  }
};

/// Dixon–Schneider: common eigenvectors of the class matrices over GF(q),
/// then an exact lift into Z[ζ_e] with e = exp(G). Verifies orthogonality.
CharTable character_table(std::shared_ptr<const PermGroup> group);

/// Column filter to the classes of p-regular elements, class order kept.
struct RestrictedTable {
  std::vector<std::size_t> class_ids;
  std::vector<std::vector<Cyc>> values;
};
RestrictedTable restrict_to_p_regular(const CharTable& ct, unsigned p);

/// Σ_g χ(g) conj ψ(g) / |G|, exact.
Cyc inner_product(const CharTable& ct, const std::vector<Cyc>& chi, const std::vector<Cyc>& psi);

}  // namespace hopfbrauer
