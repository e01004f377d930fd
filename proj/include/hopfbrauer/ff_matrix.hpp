#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopfbrauer/finite_field.hpp"

namespace hopfbrauer {

using FFVector = std::vector<GaloisField::Elem>;
/// Polynomial over a finite field, low degree first, no trailing zeros.
using FFPoly = std::vector<GaloisField::Elem>;

/// Dense matrix over GF(p^d). Matrices act on column vectors.
class FFMatrix {
 public:
  using Elem = GaloisField::Elem;

  FFMatrix() = default;
  FFMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FFMatrix identity(FieldPtr field, std::size_t n);
  /// Scalar multiple of the identity.
  static FFMatrix scalar(FieldPtr field, std::size_t n, Elem c);

  const FieldPtr& field() const { return field_; }
  const GaloisField& f() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const FFMatrix& a, const FFMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

FFMatrix operator*(const FFMatrix& a, const FFMatrix& b);
FFMatrix operator+(const FFMatrix& a, const FFMatrix& b);
FFMatrix operator-(const FFMatrix& a, const FFMatrix& b);
FFMatrix scale(const FFMatrix& a, GaloisField::Elem c);
/// a + c * b, the building block of random algebra elements.
FFMatrix add_scaled(const FFMatrix& a, const FFMatrix& b, GaloisField::Elem c);
FFMatrix transpose(const FFMatrix& a);
FFMatrix power(const FFMatrix& a, std::uint64_t e);
GaloisField::Elem trace(const FFMatrix& a);
FFVector apply(const FFMatrix& a, const FFVector& v);

std::size_t rank(const FFMatrix& a);
/// Rows of the result form a basis of {v : a v = 0}.
FFMatrix nullspace(const FFMatrix& a);
std::size_t nullity(const FFMatrix& a);
std::optional<FFMatrix> inverse(const FFMatrix& a);
GaloisField::Elem determinant(const FFMatrix& a);
/// Monic characteristic polynomial det(x I - a).
FFPoly charpoly(const FFMatrix& a);
/// f(a) for a polynomial f.
FFMatrix evaluate(const FFPoly& f, const FFMatrix& a);

/// Incrementally built subspace in semi-echelon form: every stored row has
/// a pivot entry 1 and is zero at the pivots of all earlier rows.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  /// Reduces v in place; the returned coefficients express the removed part
  /// in terms of the stored rows.
  FFVector reduce(FFVector& v) const;
  /// Adds v if it is independent of the current rows. Returns true if added.
  bool add(FFVector v);

  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<FFVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Ascending coordinates that are not pivots; a complement basis.
  std::vector<std::size_t> non_pivots() const;
  FFMatrix as_matrix() const;
  const FieldPtr& field() const { return field_; }

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<FFVector> rows_;
  std::vector<std::size_t> pivots_;
};

namespace ffpoly {

void trim(FFPoly& a);
std::size_t degree(const FFPoly& a);  // degree of the zero polynomial is 0
FFPoly add(const GaloisField& f, const FFPoly& a, const FFPoly& b);
FFPoly sub(const GaloisField& f, const FFPoly& a, const FFPoly& b);
FFPoly mul(const GaloisField& f, const FFPoly& a, const FFPoly& b);
/// Returns (quotient, remainder).
std::pair<FFPoly, FFPoly> divmod(const GaloisField& f, const FFPoly& a, const FFPoly& b);
FFPoly mod(const GaloisField& f, const FFPoly& a, const FFPoly& b);
FFPoly monic(const GaloisField& f, const FFPoly& a);
FFPoly gcd(const GaloisField& f, FFPoly a, FFPoly b);
FFPoly derivative(const GaloisField& f, const FFPoly& a);
GaloisField::Elem eval(const GaloisField& f, const FFPoly& a, GaloisField::Elem x);
/// Distinct monic irreducible factors, sorted by (degree, coefficients).
std::vector<FFPoly> irreducible_factors(const GaloisField& f, const FFPoly& a);

}  // namespace ffpoly

}  // namespace hopfbrauer
