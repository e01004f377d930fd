#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfbrauer/cyclotomic.hpp"

namespace hopfbrauer {

template <class T>
using ExactMatrix = std::vector<std::vector<T>>;

namespace detail {

inline Rational field_inverse(const Rational& x) { return 1 / x; }
inline Cyc field_inverse(const Cyc& x) { return x.inverse(); }
inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const Cyc& x) { return x.is_zero(); }

}  // namespace detail

/// In-place reduced row echelon form over Q or Q(ζ). Returns pivot columns.
template <class T>
std::vector<std::size_t> rref(ExactMatrix<T>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && detail::field_is_zero(a[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    const T inv = detail::field_inverse(a[row][col]);
    for (std::size_t j = col; j < cols; ++j)
      if (!detail::field_is_zero(a[row][j])) a[row][j] = a[row][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || detail::field_is_zero(a[i][col])) continue;
      const T c = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!detail::field_is_zero(a[row][j])) a[i][j] = a[i][j] - c * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t exact_rank(ExactMatrix<T> a) {
  return rref(a).size();
}

/// Coefficients c with Σ_j c_j rows[j] = target. Returns nullopt if target is
/// outside the row span; throws InvalidArgument if the rows are dependent.
template <class T>
std::optional<std::vector<T>> solve_in_row_span(const ExactMatrix<T>& rows, const std::vector<T>& target);

/// Rational combination Σ_j c_j rows[j] = target of vectors over Q(ζ),
/// solved coordinate-wise. The rows must be Q-independent after expansion.
std::optional<std::vector<Rational>> solve_rational_combination(const ExactMatrix<Cyc>& rows,
                                                                const std::vector<Cyc>& target);

/// Determinant of an integer matrix by fraction-free elimination.
Integer integer_determinant(const std::vector<std::vector<long long>>& a);

extern template std::optional<std::vector<Rational>> solve_in_row_span(const ExactMatrix<Rational>&,
                                                                       const std::vector<Rational>&);
extern template std::optional<std::vector<Cyc>> solve_in_row_span(const ExactMatrix<Cyc>&,
                                                                  const std::vector<Cyc>&);

}  // namespace hopfbrauer
