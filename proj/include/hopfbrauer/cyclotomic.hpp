#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hopfbrauer {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<long long>& cyclotomic_polynomial(unsigned m);

/// Element of Q(ζ_m), stored on the power basis 1, ζ_m, ..., ζ_m^(φ(m)-1).
///
/// Elements of Z[ζ_m] are exactly those with integer coordinates. Binary
/// operations on operands of different conductors promote both to the lcm.
class Cyc {
 public:
  Cyc() : conductor_(1), coeffs_(1) {}
  Cyc(long value) : conductor_(1), coeffs_{Rational(value)} {}  // NOLINT(implicit)
  Cyc(const Rational& value) : conductor_(1), coeffs_{value} {}  // NOLINT(implicit)

  /// ζ_m^k.
  static Cyc zeta(unsigned m, long long k = 1);
  /// Σ_k c[k] ζ_m^k for a coefficient vector of length m.
  static Cyc from_exponents(unsigned m, const std::vector<Rational>& by_exponent);
  /// Σ_k mult[k] ζ_m^k, the usual shape of a lifted eigenvalue multiset.
  static Cyc from_multiplicities(unsigned m, const std::vector<long>& mult);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Same number written in Q(ζ_target); target must be a multiple of the conductor.
  Cyc promote(unsigned target) const;
  /// Rewrites in Q(ζ_target) if the number lies there (target | conductor).
  std::optional<Cyc> demote(unsigned target) const;
  /// Rewrites with the smallest conductor dividing the current one.
  Cyc normalized() const;

  /// Galois automorphism ζ ↦ ζ^t, t coprime to the conductor.
  Cyc galois(long long t) const;
  /// Complex conjugate (σ_{-1}).
  Cyc conj() const { return galois(-1); }
  Cyc inverse() const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;
  Rational to_rational() const;  // throws unless is_rational()

  std::string to_string() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inverse(); }
  Cyc operator-() const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  /// Total order: compare on the lcm conductor, coordinates lexicographically.
  friend std::strong_ordering operator<=>(const Cyc& a, const Cyc& b);

 private:
  Cyc(unsigned m, std::vector<Rational> coeffs) : conductor_(m), coeffs_(std::move(coeffs)) {}
  std::vector<Rational> exponent_form() const;

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace hopfbrauer
