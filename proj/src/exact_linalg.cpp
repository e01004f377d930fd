#include "hopfbrauer/exact_linalg.hpp"

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

template <class T>
std::optional<std::vector<T>> solve_in_row_span(const ExactMatrix<T>& rows, const std::vector<T>& target) {
  const std::size_t k = rows.size();
  const std::size_t n = target.size();
  // Columns are the given rows, plus the target as the last column.
  ExactMatrix<T> a(n, std::vector<T>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rows[j].size() != n) throw InvalidArgument("solve_in_row_span: ragged input");
      a[i][j] = rows[j][i];
    }
    a[i][k] = target[i];
  }
  auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw InvalidArgument("solve_in_row_span: rows are linearly dependent");
  std::vector<T> x(k);
  for (std::size_t r = 0; r < k; ++r) x[r] = a[r][k];
  return x;
}

template std::optional<std::vector<Rational>> solve_in_row_span(const ExactMatrix<Rational>&,
                                                                const std::vector<Rational>&);
template std::optional<std::vector<Cyc>> solve_in_row_span(const ExactMatrix<Cyc>&, const std::vector<Cyc>&);

std::optional<std::vector<Rational>> solve_rational_combination(const ExactMatrix<Cyc>& rows,
                                                                const std::vector<Cyc>& target) {
  unsigned m = 1;
  for (const auto& r : rows)
    for (const auto& c : r) m = static_cast<unsigned>(nt::lcm(m, c.conductor()));
  for (const auto& c : target) m = static_cast<unsigned>(nt::lcm(m, c.conductor()));
  auto expand = [m](const std::vector<Cyc>& v) {
    std::vector<Rational> out;
    for (const auto& c : v) {
      const auto coeffs = c.promote(m).coefficients();
      out.insert(out.end(), coeffs.begin(), coeffs.end());
    }
    return out;
  };
  ExactMatrix<Rational> expanded;
  expanded.reserve(rows.size());
  for (const auto& r : rows) expanded.push_back(expand(r));
  return solve_in_row_span(expanded, expand(target));
}

Integer integer_determinant(const std::vector<std::vector<long long>>& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].size() != n) throw InvalidArgument("integer_determinant: matrix not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(input[i][j]);
  }
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace hopfbrauer
