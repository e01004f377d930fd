#include "hopfbrauer/factored_group.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hopfbrauer/errors.hpp"

namespace hopfbrauer {

FactoredGroup FactoredGroup::build(PermGroup q, PermGroup f, PermGroup g) {
  if (f.degree() != q.degree() || g.degree() != q.degree())
    throw NotSubgroup("F, G and Q must have the same degree");
  if (!f.is_subgroup_of(q)) throw NotSubgroup("F is not a subgroup of Q");
  if (!g.is_subgroup_of(q)) throw NotSubgroup("G is not a subgroup of Q");
  if (f.order() * g.order() != q.order())
    throw NotFactorizable("|F|*|G| = " + std::to_string(f.order() * g.order()) +
                          " differs from |Q| = " + std::to_string(q.order()));

  FactoredGroup fg;
  const std::size_t nf = f.order();
  const std::size_t ng = g.order();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  fg.factorization_.assign(q.order(), {kUnset, kUnset});
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t x = 0; x < ng; ++x) {
      std::size_t qi = q.index_of(f.element(a) * g.element(x));
      if (fg.factorization_[qi].first != kUnset)
        throw NotFactorizable("F ∩ G is nontrivial: " + q.element(qi).to_string() +
                              " factors twice");
      fg.factorization_[qi] = {a, x};
    }
  }

  fg.lhd_.resize(ng * nf);
  fg.rhd_.resize(ng * nf);
  for (std::size_t x = 0; x < ng; ++x) {
    for (std::size_t a = 0; a < nf; ++a) {
      auto [a2, x2] = fg.factorization_[q.index_of(g.element(x) * f.element(a))];
      fg.rhd_[x * nf + a] = a2;
      fg.lhd_[x * nf + a] = x2;
    }
  }

  // ◁ is a right action, 1 ◁ a = 1, 1 ▷ a = a, and the ▷ cocycle identity.
  for (std::size_t x = 0; x < ng; ++x) {
    if (fg.lhd_[x * nf] != x || fg.rhd_[x * nf] != 0)
      throw InternalError("action table: x ◁ 1 != x or x ▷ 1 != 1");
    for (std::size_t a = 0; a < nf; ++a) {
      if (x == 0 && (fg.lhd_[a] != 0 || fg.rhd_[a] != a))
        throw InternalError("action table: 1 ◁ a != 1 or 1 ▷ a != a");
      const std::size_t xa = fg.lhd_[x * nf + a];
      for (std::size_t b = 0; b < nf; ++b) {
        const std::size_t ab = f.multiply(a, b);
        if (fg.lhd_[xa * nf + b] != fg.lhd_[x * nf + ab])
          throw InternalError("action table: (x ◁ a) ◁ b != x ◁ ab");
        if (fg.rhd_[x * nf + ab] != f.multiply(fg.rhd_[x * nf + a], fg.rhd_[xa * nf + b]))
          throw InternalError("action table: x ▷ ab != (x ▷ a)((x ◁ a) ▷ b)");
      }
    }
  }

  fg.q_ = std::move(q);
  fg.f_ = std::move(f);
  fg.g_ = std::move(g);
  return fg;
}

std::pair<Perm, Perm> FactoredGroup::factorize(const Perm& q) const {
  auto [a, x] = factorization_[q_.index_of(q)];
  return {f_.element(a), g_.element(x)};
}

Perm FactoredGroup::lhd(const Perm& x, const Perm& a) const {
  return g_.element(lhd(g_.index_of(x), f_.index_of(a)));
}

Perm FactoredGroup::rhd(const Perm& x, const Perm& a) const {
  return f_.element(rhd(g_.index_of(x), f_.index_of(a)));
}

FactoredGroup symmetric_factorization(std::size_t n) {
  if (n < 2) throw InvalidArgument("symmetric_factorization: n must be at least 2");
  PermGroup q = symmetric_group(n);
  std::vector<Perm> fgens;
  if (n >= 3) fgens.push_back(Perm::from_cycles({{1, 2}}, n));
  if (n >= 4) {
    std::vector<std::size_t> cyc(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) cyc[i] = i + 1;
    fgens.push_back(Perm::from_cycles({cyc}, n));
  }
  PermGroup f = enumerate(fgens, n);
  f.set_name("S" + std::to_string(n - 1));
  PermGroup g = cyclic_group(n);
  return FactoredGroup::build(std::move(q), std::move(f), std::move(g));
}

std::vector<Orbit> lhd_orbits(const FactoredGroup& fg) {
  return orbits_and_stabilizers(fg.f(), fg.g().order(),
                                [&](std::size_t x, std::size_t a) { return fg.lhd(x, a); });
}

GroupBlocks parse_group_blocks(std::string_view text) {
  std::vector<std::vector<std::string>> blocks(1);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    blocks.back().push_back(line.substr(first, last - first + 1));
  }
  if (blocks.back().empty()) blocks.pop_back();
  if (blocks.size() != 3)
    throw InvalidArgument("group file: expected 3 generator blocks (Q, F, G), found " + std::to_string(blocks.size()));
  return GroupBlocks{blocks[0], blocks[1], blocks[2]};
}

FactoredGroup build_from_blocks(const GroupBlocks& blocks, std::size_t element_cap) {
  std::size_t degree = 1;
  for (const auto* block : {&blocks.q, &blocks.f, &blocks.g})
    for (const auto& gen : *block) {
      std::size_t value = 0;
      for (char c : gen) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          value = value * 10 + static_cast<std::size_t>(c - '0');
          degree = std::max(degree, value);
        } else {
          value = 0;
        }
      }
    }
  auto make = [&](const std::vector<std::string>& gens) {
    std::vector<Perm> perms;
    for (const auto& s : gens) perms.push_back(Perm::parse(s, degree));
    return enumerate(perms, degree, element_cap);
  };
  return FactoredGroup::build(make(blocks.q), make(blocks.f), make(blocks.g));
}

FactoredGroup load_group_file(const std::string& path, std::size_t element_cap) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open group file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return build_from_blocks(parse_group_blocks(buf.str()), element_cap);
}

}  // namespace hopfbrauer
