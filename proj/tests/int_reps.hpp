#pragma once

#include <functional>
#include <vector>

#include "hopfbrauer/modular_reps.hpp"

namespace hopfbrauer::testing {

using IntRep = std::function<std::vector<std::vector<long>>(const Perm&)>;

inline long sign(const Perm& g) {
  const std::size_t n = g.degree();
  std::vector<bool> seen(n, false);
  long s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

// Standard module on e_i - e_n.
inline std::vector<std::vector<long>> standard(const Perm& g) {
  const std::size_t n = g.degree();
  std::vector<std::vector<long>> m(n - 1, std::vector<long>(n - 1, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (g[i] != n - 1) m[g[i]][i] += 1;
    if (g[n - 1] != n - 1) m[g[n - 1]][i] -= 1;
  }
  return m;
}

// S4 -> S3 through the three pairings {01|23}, {02|13}, {03|12}.
inline Perm on_pairings(const Perm& g) {
  auto pairing = [](std::size_t a, std::size_t b) {
    const std::size_t partner = a == 0 ? b : b == 0 ? a : 6 - a - b;
    return static_cast<Perm::Point>(partner - 1);
  };
  std::vector<Perm::Point> images(3);
  const std::size_t reps[3][2] = {{0, 1}, {0, 2}, {0, 3}};
  for (std::size_t k = 0; k < 3; ++k) images[k] = pairing(g[reps[k][0]], g[reps[k][1]]);
  return Perm(images);
}

inline FFModule reduce_rep(const PermGroup& g, const FieldPtr& field, const IntRep& rep) {
  std::vector<FFMatrix> gens;
  std::size_t dim = rep(Perm(g.degree())).size();
  for (const auto& s : g.generators()) {
    const auto m = rep(s);
    FFMatrix a(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) a(i, j) = field->from_int(m[i][j]);
    gens.push_back(std::move(a));
  }
  return make_module(field, dim, std::move(gens));
}

inline std::vector<Cyc> class_traces(const PermGroup& g, const ConjClasses& cc, const IntRep& rep) {
  std::vector<Cyc> out;
  for (auto r : cc.representatives) {
    const auto m = rep(g.element(r));
    long t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    out.push_back(Cyc(t));
  }
  return out;
}

}  // namespace hopfbrauer::testing
