#include "hopfbrauer/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

namespace {

std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    long long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw InternalError("cyclotomic polynomial division not exact");
  return quot;
}

/// Reduces Σ poly[k] x^k modulo Φ_m into a vector of length φ(m).
std::vector<Rational> reduce(unsigned m, std::vector<Rational> poly) {
  const auto& phi_m = cyclotomic_polynomial(m);
  const std::size_t deg = phi_m.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    Rational c = poly[k];
    for (std::size_t i = 0; i < deg; ++i)
      if (phi_m[i] != 0) poly[k - deg + i] -= c * static_cast<long>(phi_m[i]);
    poly[k] = 0;
  }
  poly.resize(deg);
  return poly;
}

/// Solves Σ_j x_j cols[j] = rhs over Q. Returns nullopt when inconsistent.
/// Requires the columns to be linearly independent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& rhs) {
  const std::size_t n = rhs.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
    a[i][k] = rhs[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j <= k; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  if (pivots.size() != k) throw InternalError("solve_columns: dependent columns");
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][k];
  return x;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<long long>> cache;
  if (m == 0) throw InvalidArgument("cyclotomic_polynomial: m must be positive");
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  std::vector<long long> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (auto d : nt::divisors(m)) {
    if (d == m) continue;
    auto it = cache.find(static_cast<unsigned>(d));
    std::vector<long long> phi_d;
    if (it != cache.end()) {
      phi_d = it->second;
    } else {
      // Recursion would deadlock on the mutex; build from scratch instead.
      std::vector<long long> num(d + 1, 0);
      num[0] = -1;
      num[d] = 1;
      for (auto e : nt::divisors(d))
        if (e != d) num = poly_divide_exact(num, cache.at(static_cast<unsigned>(e)));
      cache.emplace(static_cast<unsigned>(d), num);
      phi_d = num;
    }
    poly = poly_divide_exact(poly, phi_d);
  }
  return cache.emplace(m, std::move(poly)).first->second;
}

Cyc Cyc::zeta(unsigned m, long long k) {
  if (m == 0) throw InvalidArgument("Cyc::zeta: m must be positive");
  std::vector<Rational> e(m);
  long long r = k % static_cast<long long>(m);
  if (r < 0) r += m;
  e[static_cast<std::size_t>(r)] = 1;
  return from_exponents(m, e);
}

Cyc Cyc::from_exponents(unsigned m, const std::vector<Rational>& by_exponent) {
  if (by_exponent.size() != m) throw InvalidArgument("Cyc::from_exponents: length must equal m");
  return Cyc(m, reduce(m, by_exponent));
}

Cyc Cyc::from_multiplicities(unsigned m, const std::vector<long>& mult) {
  std::vector<Rational> e(m);
  for (std::size_t k = 0; k < m && k < mult.size(); ++k) e[k] = mult[k];
  return from_exponents(m, e);
}

std::vector<Rational> Cyc::exponent_form() const {
  std::vector<Rational> e(conductor_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) e[j] = coeffs_[j];
  return e;
}

Cyc Cyc::promote(unsigned target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0)
    throw InvalidArgument("Cyc::promote: " + std::to_string(target) + " is not a multiple of " +
                          std::to_string(conductor_));
  const unsigned step = target / conductor_;
  std::vector<Rational> e(target);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) e[j * step] = coeffs_[j];
  return Cyc(target, reduce(target, std::move(e)));
}

std::optional<Cyc> Cyc::demote(unsigned target) const {
  if (target == conductor_) return *this;
  if (conductor_ % target != 0)
    throw InvalidArgument("Cyc::demote: target must divide the conductor");
  const std::size_t phi_t = nt::euler_phi(target);
  std::vector<std::vector<Rational>> cols;
  cols.reserve(phi_t);
  for (std::size_t j = 0; j < phi_t; ++j)
    cols.push_back(zeta(target, static_cast<long long>(j)).promote(conductor_).coeffs_);
  auto x = solve_columns(cols, coeffs_);
  if (!x) return std::nullopt;
  return Cyc(target, std::move(*x));
}

Cyc Cyc::normalized() const {
  for (auto d : nt::divisors(conductor_)) {
    if (auto r = demote(static_cast<unsigned>(d))) return *r;
  }
  return *this;
}

Cyc Cyc::galois(long long t) const {
  const long long m = conductor_;
  long long tt = ((t % m) + m) % m;
  if (nt::gcd(static_cast<std::uint64_t>(tt == 0 ? m : tt), static_cast<std::uint64_t>(m)) != 1 &&
      m != 1)
    throw InvalidArgument("Cyc::galois: exponent not coprime to the conductor");
  std::vector<Rational> e(conductor_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    e[static_cast<std::size_t>((static_cast<long long>(j) * tt) % m)] += coeffs_[j];
  return Cyc(conductor_, reduce(conductor_, std::move(e)));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw InvalidArgument("Cyc::inverse: division by zero");
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<Rational>> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    cols.push_back((*this * zeta(conductor_, static_cast<long long>(j))).promote(conductor_).coeffs_);
  std::vector<Rational> one(n);
  one[0] = 1;
  auto x = solve_columns(cols, one);
  if (!x) throw InternalError("Cyc::inverse: singular multiplication map");
  return Cyc(conductor_, std::move(*x));
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

bool Cyc::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational Cyc::to_rational() const {
  if (!is_rational()) throw InvalidArgument("Cyc::to_rational: value " + to_string() + " is irrational");
  return coeffs_[0];
}

std::string Cyc::to_string() const {
  Cyc n = normalized();
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < n.coeffs_.size(); ++j) {
    const Rational& c = n.coeffs_[j];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << "E(" << n.conductor_ << ')';
    if (j > 1) out << '^' << j;
  }
  return first ? "0" : out.str();
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (o.conductor_ == conductor_) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  const auto m = static_cast<unsigned>(nt::lcm(conductor_, o.conductor_));
  *this = promote(m);
  Cyc other = o.promote(m);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  const auto m = static_cast<unsigned>(nt::lcm(conductor_, o.conductor_));
  const Cyc a = promote(m);
  const Cyc b = o.promote(m);
  if (m == 1) {
    coeffs_ = {a.coeffs_[0] * b.coeffs_[0]};
    conductor_ = 1;
    return *this;
  }
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  conductor_ = m;
  coeffs_ = reduce(m, std::move(prod));
  return *this;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const auto m = static_cast<unsigned>(nt::lcm(a.conductor_, b.conductor_));
  return a.promote(m).coeffs_ == b.promote(m).coeffs_;
}

std::strong_ordering operator<=>(const Cyc& a, const Cyc& b) {
  const Cyc na = a.conductor_ == 1 ? a : a.normalized();
  const Cyc nb = b.conductor_ == 1 ? b : b.normalized();
  if (na.conductor_ != nb.conductor_) return na.conductor_ <=> nb.conductor_;
  for (std::size_t j = 0; j < na.coeffs_.size(); ++j) {
    int c = cmp(na.coeffs_[j], nb.coeffs_[j]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace hopfbrauer
