#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfbrauer/perm_group.hpp"

namespace hopfbrauer {

/// Exact factorization Q = F G with F ∩ G = 1: every q is uniquely a * x with
/// a in F, x in G. Carries the mutual actions defined by
///   x a = (x ▷ a)(x ◁ a),   x ▷ a in F, x ◁ a in G.
///
/// Elements of F and G are addressed by their index in the respective group.
class FactoredGroup {
 public:
  /// Builds all tables by exhaustive search and checks every invariant.
  /// Throws NotSubgroup / NotFactorizable.
  static FactoredGroup build(PermGroup q, PermGroup f, PermGroup g);

  const PermGroup& q() const { return q_; }
  const PermGroup& f() const { return f_; }
  const PermGroup& g() const { return g_; }

  /// q = a * x; returns (a, x) as (F index, G index).
  std::pair<std::size_t, std::size_t> factorize(std::size_t q_index) const {
    return factorization_[q_index];
  }
  /// Perm-level variant; throws MembershipError if q is not in Q.
  std::pair<Perm, Perm> factorize(const Perm& q) const;

  /// x ◁ a, an element of G.
  std::size_t lhd(std::size_t x, std::size_t a) const { return lhd_[x * f_.order() + a]; }
  /// x ▷ a, an element of F.
  std::size_t rhd(std::size_t x, std::size_t a) const { return rhd_[x * f_.order() + a]; }

  Perm lhd(const Perm& x, const Perm& a) const;
  Perm rhd(const Perm& x, const Perm& a) const;

 private:
  PermGroup q_, f_, g_;
  std::vector<std::pair<std::size_t, std::size_t>> factorization_;
  std::vector<std::size_t> lhd_;
  std::vector<std::size_t> rhd_;
};

/// S_n = S_{n-1} C_n with S_{n-1} fixing the point n and C_n = <(1 2 ... n)>.
FactoredGroup symmetric_factorization(std::size_t n);

/// Generators of Q, F and G in cycle notation.
struct GroupBlocks {
  std::vector<std::string> q, f, g;
};

/// Text format: one generator per line, blank lines between the Q, F and G
/// blocks, '#' starts a comment. A block may list "()" for a trivial group.
GroupBlocks parse_group_blocks(std::string_view text);
/// Degree is the largest point mentioned in any block.
FactoredGroup build_from_blocks(const GroupBlocks& blocks, std::size_t element_cap = kDefaultElementCap);
FactoredGroup load_group_file(const std::string& path, std::size_t element_cap = kDefaultElementCap);

/// Orbits of F on G under ◁ with stabilizers and coset transversals.
std::vector<Orbit> lhd_orbits(const FactoredGroup& fg);

}  // namespace hopfbrauer
