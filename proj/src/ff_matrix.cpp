#include "hopfbrauer/ff_matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "hopfbrauer/errors.hpp"

namespace hopfbrauer {

namespace {

void require_same_field(const FFMatrix& a, const FFMatrix& b) {
  if (a.field() != b.field()) throw InvalidArgument("FFMatrix: operands over different fields");
}

/// Row-reduces in place to reduced row echelon form, returns pivot columns.
std::vector<std::size_t> rref_in_place(FFMatrix& m) {
  const GaloisField& f = m.f();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const auto inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const auto c = m(i, col);
      if (c == 0) continue;
      const auto nc = f.neg(c);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) = f.add(m(i, j), f.mul(nc, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

FFMatrix FFMatrix::identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, 1); }

FFMatrix FFMatrix::scalar(FieldPtr field, std::size_t n, Elem c) {
  FFMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool FFMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool FFMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

FFMatrix operator*(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw InvalidArgument("FFMatrix: shape mismatch in product");
  const GaloisField& f = a.f();
  FFMatrix r(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = r.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto c = a(i, k);
      if (c == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (brow[j] != 0) out[j] = f.add(out[j], f.mul(c, brow[j]));
    }
  }
  return r;
}

FFMatrix operator+(const FFMatrix& a, const FFMatrix& b) { return add_scaled(a, b, 1); }

FFMatrix operator-(const FFMatrix& a, const FFMatrix& b) {
  return add_scaled(a, b, a.f().neg(1));
}

FFMatrix scale(const FFMatrix& a, GaloisField::Elem c) {
  FFMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (auto& e : r.row(i)) e = a.f().mul(e, c);
  return r;
}

FFMatrix add_scaled(const FFMatrix& a, const FFMatrix& b, GaloisField::Elem c) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument("FFMatrix: shape mismatch in sum");
  const GaloisField& f = a.f();
  FFMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = r.row(i);
    auto in = b.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (in[j] != 0) out[j] = f.add(out[j], f.mul(c, in[j]));
  }
  return r;
}

FFMatrix transpose(const FFMatrix& a) {
  FFMatrix r(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

FFMatrix power(const FFMatrix& a, std::uint64_t e) {
  FFMatrix result = FFMatrix::identity(a.field(), a.rows());
  FFMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

GaloisField::Elem trace(const FFMatrix& a) {
  GaloisField::Elem t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t = a.f().add(t, a(i, i));
  return t;
}

FFVector apply(const FFMatrix& a, const FFVector& v) {
  const GaloisField& f = a.f();
  FFVector r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = a.row(i);
    GaloisField::Elem s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (row[j] != 0 && v[j] != 0) s = f.add(s, f.mul(row[j], v[j]));
    r[i] = s;
  }
  return r;
}

std::size_t rank(const FFMatrix& a) {
  FFMatrix m = a;
  return rref_in_place(m).size();
}

FFMatrix nullspace(const FFMatrix& a) {
  FFMatrix m = a;
  auto pivots = rref_in_place(m);
  const GaloisField& f = a.f();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  FFMatrix basis(a.field(), a.cols() - pivots.size(), a.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(k, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(k, pivots[r]) = f.neg(m(r, free));
    ++k;
  }
  return basis;
}

std::size_t nullity(const FFMatrix& a) { return a.cols() - rank(a); }

std::optional<FFMatrix> inverse(const FFMatrix& a) {
  if (!a.square()) throw InvalidArgument("inverse: matrix not square");
  const std::size_t n = a.rows();
  FFMatrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  FFMatrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

GaloisField::Elem determinant(const FFMatrix& a) {
  if (!a.square()) throw InvalidArgument("determinant: matrix not square");
  const GaloisField& f = a.f();
  FFMatrix m = a;
  const std::size_t n = m.rows();
  GaloisField::Elem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    const auto inv = f.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const auto c = f.mul(m(i, col), inv);
      if (c == 0) continue;
      const auto nc = f.neg(c);
      for (std::size_t j = col; j < n; ++j) m(i, j) = f.add(m(i, j), f.mul(nc, m(col, j)));
    }
  }
  return det;
}

FFPoly charpoly(const FFMatrix& a) {
  if (!a.square()) throw InvalidArgument("charpoly: matrix not square");
  const GaloisField& f = a.f();
  const std::size_t n = a.rows();
  FFMatrix h = a;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const auto inv = f.inv(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      const auto u = f.mul(h(r, m - 1), inv);
      if (u == 0) continue;
      const auto nu = f.neg(u);
      for (std::size_t j = 0; j < n; ++j) h(r, j) = f.add(h(r, j), f.mul(nu, h(m, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, m) = f.add(h(j, m), f.mul(u, h(j, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - Σ_{i=1}^{k-1} (Π_{j=k-i+1}^{k} h_{j,j-1}) h_{k-i,k} p_{k-i-1}
  auto H = [&](std::size_t i, std::size_t j) { return h(i - 1, j - 1); };  // 1-based
  std::vector<FFPoly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = ffpoly::mul(f, FFPoly{f.neg(H(k, k)), 1}, p[k - 1]);
    GaloisField::Elem t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, H(k - i + 1, k - i));
      if (t == 0) break;
      const auto c = f.mul(t, H(k - i, k));
      if (c == 0) continue;
      p[k] = ffpoly::sub(f, p[k], ffpoly::mul(f, FFPoly{c}, p[k - i - 1]));
    }
  }
  return p[n];
}

FFMatrix evaluate(const FFPoly& poly, const FFMatrix& a) {
  // Horner.
  FFMatrix r(a.field(), a.rows(), a.cols());
  for (std::size_t k = poly.size(); k-- > 0;) {
    r = r * a;
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) = a.f().add(r(i, i), poly[k]);
  }
  return r;
}

FFVector EchelonBasis::reduce(FFVector& v) const {
  const GaloisField& f = *field_;
  FFVector coeffs(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto c = v[pivots_[r]];
    if (c == 0) continue;
    coeffs[r] = c;
    const auto nc = f.neg(c);
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < dim_; ++j)
      if (row[j] != 0) v[j] = f.add(v[j], f.mul(nc, row[j]));
  }
  return coeffs;
}

bool EchelonBasis::add(FFVector v) {
  reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const auto inv = field_->inv(v[piv]);
  for (auto& e : v) e = field_->mul(e, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::vector<std::size_t> EchelonBasis::non_pivots() const {
  std::vector<bool> is_pivot(dim_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim_; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

FFMatrix EchelonBasis::as_matrix() const {
  FFMatrix m(field_, rows_.size(), dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = rows_[i][j];
  return m;
}

namespace ffpoly {

void trim(FFPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t degree(const FFPoly& a) { return a.empty() ? 0 : a.size() - 1; }

FFPoly add(const GaloisField& f, const FFPoly& a, const FFPoly& b) {
  FFPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FFPoly sub(const GaloisField& f, const FFPoly& a, const FFPoly& b) {
  FFPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FFPoly mul(const GaloisField& f, const FFPoly& a, const FFPoly& b) {
  if (a.empty() || b.empty()) return {};
  FFPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<FFPoly, FFPoly> divmod(const GaloisField& f, const FFPoly& a, const FFPoly& b) {
  FFPoly bb = b;
  trim(bb);
  if (bb.empty()) throw InvalidArgument("ffpoly::divmod: division by zero polynomial");
  FFPoly r = a;
  trim(r);
  if (r.size() < bb.size()) return {{}, r};
  FFPoly q(r.size() - bb.size() + 1, 0);
  const auto lead_inv = f.inv(bb.back());
  while (r.size() >= bb.size()) {
    const auto c = f.mul(r.back(), lead_inv);
    const std::size_t shift = r.size() - bb.size();
    q[shift] = c;
    const auto nc = f.neg(c);
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] = f.add(r[shift + i], f.mul(nc, bb[i]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

FFPoly mod(const GaloisField& f, const FFPoly& a, const FFPoly& b) { return divmod(f, a, b).second; }

FFPoly monic(const GaloisField& f, const FFPoly& a) {
  FFPoly r = a;
  trim(r);
  if (r.empty()) return r;
  const auto inv = f.inv(r.back());
  for (auto& c : r) c = f.mul(c, inv);
  return r;
}

FFPoly gcd(const GaloisField& f, FFPoly a, FFPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FFPoly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

FFPoly derivative(const GaloisField& f, const FFPoly& a) {
  if (a.size() <= 1) return {};
  FFPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(f.from_int(static_cast<long long>(i)), a[i]);
  trim(r);
  return r;
}

GaloisField::Elem eval(const GaloisField& f, const FFPoly& a, GaloisField::Elem x) {
  GaloisField::Elem r = 0;
  for (std::size_t k = a.size(); k-- > 0;) r = f.add(f.mul(r, x), a[k]);
  return r;
}

namespace {

FFPoly powmod(const GaloisField& f, FFPoly base, const mpz_class& e, const FFPoly& m) {
  FFPoly result{1};
  base = mod(f, base, m);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(f, mul(f, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(f, mul(f, result, base), m);
  }
  return result;
}

FFPoly pth_root(const GaloisField& f, const FFPoly& a) {
  const unsigned p = f.characteristic();
  // a^(1/p) = a^(q/p) coefficient-wise.
  const std::uint64_t root_exp = f.size() / p;
  FFPoly r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(f.pow(a[i], root_exp));
  trim(r);
  return r;
}

void equal_degree_split(const GaloisField& f, const FFPoly& g, std::size_t d, std::mt19937_64& rng,
                        std::vector<FFPoly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), f.size(), d);
  const mpz_class e = (qd - 1) / 2;
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.size() - 1);
  for (;;) {
    FFPoly a(degree(g));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) == 0) continue;
    FFPoly b = sub(f, powmod(f, a, e, g), FFPoly{1});
    FFPoly h = gcd(f, g, b);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(f, h, d, rng, out);
      equal_degree_split(f, divmod(f, g, h).first, d, rng, out);
      return;
    }
  }
}

void squarefree_factors(const GaloisField& f, FFPoly g, std::mt19937_64& rng, std::vector<FFPoly>& out) {
  const FFPoly x{0, 1};
  FFPoly h = x;
  const mpz_class q = f.size();
  for (std::size_t i = 1; degree(g) >= 2 * i; ++i) {
    h = powmod(f, h, q, g);
    FFPoly d = gcd(f, g, sub(f, h, x));
    if (degree(d) > 0) {
      equal_degree_split(f, d, i, rng, out);
      g = divmod(f, g, d).first;
      h = mod(f, h, g);
    }
  }
  if (degree(g) > 0) out.push_back(monic(f, g));
}

void collect_factors(const GaloisField& f, const FFPoly& a, std::mt19937_64& rng, std::vector<FFPoly>& out) {
  if (degree(a) == 0) return;
  FFPoly da = derivative(f, a);
  if (da.empty()) {
    collect_factors(f, pth_root(f, a), rng, out);
    return;
  }
  FFPoly g = gcd(f, a, da);
  squarefree_factors(f, monic(f, divmod(f, a, g).first), rng, out);
  collect_factors(f, g, rng, out);
}

}  // namespace

std::vector<FFPoly> irreducible_factors(const GaloisField& f, const FFPoly& a) {
  FFPoly m = monic(f, a);
  std::mt19937_64 rng(0x5eedf00dULL);
  std::vector<FFPoly> out;
  collect_factors(f, m, rng, out);
  for (auto& p : out) p = monic(f, p);
  std::sort(out.begin(), out.end(), [](const FFPoly& x, const FFPoly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ffpoly

}  // namespace hopfbrauer
