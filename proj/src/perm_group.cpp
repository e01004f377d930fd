#include "hopfbrauer/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

std::optional<std::size_t> PermGroup::find(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::index_of(const Perm& g) const {
  auto i = find(g);
  if (!i) throw MembershipError("element " + g.to_string() + " is not in group " + name_);
  return *i;
}

std::size_t PermGroup::multiply(std::size_t i, std::size_t j) const {
  return index_.at(elements_[i] * elements_[j]);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Perm& g) { return other.contains(g); });
}

PermGroup enumerate(const std::vector<Perm>& generators, std::size_t degree,
                    std::size_t element_cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InvalidArgument("enumerate: generator " + g.to_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  std::unordered_map<Perm, std::size_t, PermHash> seen;
  std::vector<Perm> found{Perm(degree)};
  seen.emplace(found.front(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& gen : generators) {
      Perm next = gen * found[head];
      if (seen.contains(next)) continue;
      if (found.size() >= element_cap)
        throw InvalidArgument("enumerate: group exceeds element cap of " +
                              std::to_string(element_cap));
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
    }
  }

  PermGroup group;
  group.degree_ = degree;
  group.generators_ = generators;
  std::sort(found.begin(), found.end());
  group.elements_ = std::move(found);
  group.index_.reserve(group.elements_.size());
  for (std::size_t i = 0; i < group.elements_.size(); ++i) group.index_.emplace(group.elements_[i], i);
  group.inverses_.resize(group.elements_.size());
  group.orders_.resize(group.elements_.size());
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    group.inverses_[i] = group.index_.at(group.elements_[i].inverse());
    group.orders_[i] = group.elements_[i].order();
    group.exponent_ = nt::lcm(group.exponent_, group.orders_[i]);
  }
  return group;
}

PermGroup subgroup_from_elements(const PermGroup& parent, const std::vector<std::size_t>& members) {
  std::vector<Perm> gens;
  std::vector<std::size_t> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  // Greedy: add the smallest element not yet generated.
  PermGroup current = enumerate({}, parent.degree());
  for (auto idx : sorted) {
    const Perm& g = parent.element(idx);
    if (current.contains(g)) continue;
    gens.push_back(g);
    current = enumerate(gens, parent.degree());
  }
  if (current.order() != sorted.size())
    throw NotSubgroup("subgroup_from_elements: element set is not closed");
  return current;
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles({{1, 2}}, n));
    if (n >= 3) {
      std::vector<std::size_t> cyc(n);
      for (std::size_t i = 0; i < n; ++i) cyc[i] = i + 1;
      gens.push_back(Perm::from_cycles({cyc}, n));
    }
  }
  auto g = enumerate(gens, n);
  g.set_name("S" + std::to_string(n));
  return g;
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<std::size_t> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = i + 1;
    gens.push_back(Perm::from_cycles({cyc}, n));
  }
  auto g = enumerate(gens, n);
  g.set_name("C" + std::to_string(n));
  return g;
}

ConjClasses conjugacy_classes(const PermGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ConjClasses cc;
  cc.class_of.assign(n, kUnset);
  std::vector<std::size_t> gen_idx;
  for (const auto& gen : g.generators()) gen_idx.push_back(g.index_of(gen));

  for (std::size_t start = 0; start < n; ++start) {
    if (cc.class_of[start] != kUnset) continue;
    const std::size_t id = cc.representatives.size();
    std::vector<std::size_t> members{start};
    cc.class_of[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto s : gen_idx) {
        // s x s^-1
        std::size_t conj = g.multiply(g.multiply(s, members[head]), g.inverse(s));
        if (cc.class_of[conj] == kUnset) {
          cc.class_of[conj] = id;
          members.push_back(conj);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cc.representatives.push_back(members.front());
    cc.sizes.push_back(members.size());
    cc.centralizer_orders.push_back(n / members.size());
    cc.members.push_back(std::move(members));
  }
  return cc;
}

std::vector<std::size_t> p_regular_classes(const PermGroup& g, const ConjClasses& cc, unsigned p) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cc.count(); ++c)
    if (g.element_order(cc.representatives[c]) % p != 0) out.push_back(c);
  return out;
}

std::vector<Orbit> orbits_and_stabilizers(
    const PermGroup& f, std::size_t num_points,
    const std::function<std::size_t(std::size_t, std::size_t)>& act) {
  std::vector<std::size_t> gen_idx;
  for (const auto& gen : f.generators()) gen_idx.push_back(f.index_of(gen));

  for (std::size_t x = 0; x < num_points; ++x) {
    if (act(x, 0) != x) throw InternalError("action axiom violated: identity moves a point");
    for (std::size_t a = 0; a < f.order(); ++a) {
      std::size_t xa = act(x, a);
      if (xa >= num_points) throw InternalError("action maps outside the point set");
      for (auto b : gen_idx)
        if (act(xa, b) != act(x, f.multiply(a, b)))
          throw InternalError("action axiom violated: act(act(x,a),b) != act(x,ab)");
    }
  }

  std::vector<Orbit> orbits;
  std::vector<bool> done(num_points, false);
  for (std::size_t x = 0; x < num_points; ++x) {
    if (done[x]) continue;
    Orbit orb;
    orb.representative = x;
    for (std::size_t a = 0; a < f.order(); ++a) {
      std::size_t y = act(x, a);
      if (!done[y]) {
        done[y] = true;
        orb.points.push_back(y);
      }
      if (y == x) orb.stabilizer.push_back(a);
    }
    std::sort(orb.points.begin(), orb.points.end());
    // For y in the orbit, the minimal t with y.t = x.
    orb.transversal.assign(orb.points.size(), static_cast<std::size_t>(-1));
    std::size_t filled = 0;
    for (std::size_t t = 0; t < f.order() && filled < orb.points.size(); ++t) {
      // y.t = x  <=>  y = x.t^-1
      std::size_t y = act(x, f.inverse(t));
      auto pos = static_cast<std::size_t>(
          std::lower_bound(orb.points.begin(), orb.points.end(), y) - orb.points.begin());
      if (orb.transversal[pos] == static_cast<std::size_t>(-1)) {
        orb.transversal[pos] = t;
        ++filled;
      }
    }
    if (orb.points.size() * orb.stabilizer.size() != f.order())
      throw InternalError("orbit-stabilizer count mismatch");
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

}  // namespace hopfbrauer
