#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfbrauer/perm.hpp"

namespace hopfbrauer {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Finite permutation group with its full element list.
///
/// Elements are sorted lexicographically by image sequence, so index 0 is
/// always the identity. All indices handed out by this class refer to that
/// order.
class PermGroup {
 public:
  PermGroup() = default;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::optional<std::size_t> find(const Perm& g) const;
  /// Throws MembershipError if g is not in the group.
  std::size_t index_of(const Perm& g) const;
  bool contains(const Perm& g) const { return find(g).has_value(); }

  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverses_[i]; }
  std::size_t element_order(std::size_t i) const { return orders_[i]; }
  /// Least common multiple of element orders.
  std::size_t exponent() const { return exponent_; }

  bool is_subgroup_of(const PermGroup& other) const;

  friend PermGroup enumerate(const std::vector<Perm>& generators, std::size_t degree,
                             std::size_t element_cap);

 private:
  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> orders_;
  std::size_t exponent_ = 1;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Closure of the generators under composition.
PermGroup enumerate(const std::vector<Perm>& generators, std::size_t degree,
                    std::size_t element_cap = kDefaultElementCap);

/// Subgroup given by an explicit element subset of `parent` (indices into
/// parent). The subset must be closed; generators are a minimal-ish greedy
/// choice from the subset.
PermGroup subgroup_from_elements(const PermGroup& parent, const std::vector<std::size_t>& members);

/// Symmetric group on n points generated by (1 2) and (1 2 ... n).
PermGroup symmetric_group(std::size_t n);
/// Cyclic group generated by the n-cycle (1 2 ... n).
PermGroup cyclic_group(std::size_t n);

struct ConjClasses {
  std::vector<std::size_t> representatives;  // element indices, minimal in each class
  std::vector<std::size_t> class_of;         // element index -> class id
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> centralizer_orders;
  std::vector<std::vector<std::size_t>> members;  // ascending element indices

  std::size_t count() const { return representatives.size(); }
};

/// Classes are ordered by their minimal element, so class 0 is {identity}.
ConjClasses conjugacy_classes(const PermGroup& g);

/// Class ids whose representative has order prime to p, ascending.
std::vector<std::size_t> p_regular_classes(const PermGroup& g, const ConjClasses& cc, unsigned p);

/// One orbit of a right action of F on a finite point set {0..n-1}.
struct Orbit {
  std::vector<std::size_t> points;      // ascending
  std::size_t representative = 0;       // min(points)
  std::vector<std::size_t> stabilizer;  // F element indices fixing the representative
  /// transversal[k] is the minimal t in F with act(points[k], t) = representative.
  /// These are representatives of the cosets t F_x, one per orbit point.
  std::vector<std::size_t> transversal;
};

/// `act(x, a)` must be a right action: act(act(x, a), b) = act(x, a b) and
/// act(x, 1) = x. Verified on every point against every element and every
/// generator; a violation throws InternalError.
std::vector<Orbit> orbits_and_stabilizers(
    const PermGroup& f, std::size_t num_points,
    const std::function<std::size_t(std::size_t, std::size_t)>& act);

}  // namespace hopfbrauer
