#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hopfbrauer {

/// GF(p^d) for odd p, elements encoded as integers in [0, q).
///
/// The code of an element is Σ c_i p^i where Σ c_i x^i is its residue modulo
/// the defining polynomial. 0 and 1 encode zero and one. The modulus is the
/// monic irreducible of degree d with the smallest code of its lower
/// coefficients; the primitive element is the smallest code generating the
/// multiplicative group.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return d_; }
  std::uint32_t size() const { return q_; }
  /// Low-to-high coefficients of the monic modulus (length d + 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }
  Elem primitive_element() const { return primitive_; }

  Elem add(Elem a, Elem b) const {
    if (d_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_table_.empty() ? add_digits(a, b) : add_table_[a * q_ + b];
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Image of an integer under Z -> GF(p) -> GF(p^d).
  Elem from_int(long long v) const;
  /// Discrete log to the primitive element; a must be nonzero.
  std::uint32_t log(Elem a) const { return log_[a]; }
  /// primitive_element()^k.
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(Elem a) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  std::string to_string(Elem a) const;

  friend std::shared_ptr<const GaloisField> build_field(unsigned p, unsigned d);

 private:
  Elem add_digits(Elem a, Elem b) const;

  unsigned p_ = 0;
  unsigned d_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  Elem primitive_ = 0;
  std::vector<Elem> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Cached: repeated calls with the same (p, d) return the same object.
/// Rejects p = 2 and fields larger than 2^20 elements.
FieldPtr build_field(unsigned p, unsigned d);

/// Smallest prime q with q = 1 mod m and q > lower_bound.
unsigned next_prime_congruent_one(unsigned m, unsigned lower_bound);

}  // namespace hopfbrauer
