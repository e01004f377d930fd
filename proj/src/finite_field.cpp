#include "hopfbrauer/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 20;

using Digits = std::vector<unsigned>;  // low-to-high coefficients over GF(p)

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mod(Digits a, const Digits& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const unsigned lead_inv = static_cast<unsigned>(nt::inverse_mod(m.back(), p));
  while (a.size() > dm) {
    unsigned c = static_cast<unsigned>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<unsigned>((a[shift + i] + static_cast<std::uint64_t>(p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

Digits poly_mul(const Digits& a, const Digits& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<unsigned>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

Digits poly_sub(Digits a, const Digits& b, unsigned p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Digits poly_gcd(Digits a, Digits b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Digits poly_powmod(Digits base, std::uint64_t e, const Digits& m, unsigned p) {
  Digits result{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Digits& f, unsigned p) {
  const std::size_t d = f.size() - 1;
  Digits x{0, 1};
  Digits xp = x;
  for (std::size_t i = 1; i <= d / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Digits g = poly_gcd(f, poly_sub(xp, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

Digits to_digits(std::uint32_t code, unsigned p, unsigned d) {
  Digits r(d, 0);
  for (unsigned i = 0; i < d; ++i) {
    r[i] = code % p;
    code /= p;
  }
  return r;
}

std::uint32_t to_code(const Digits& digits, unsigned p) {
  std::uint32_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
  return code;
}

}  // namespace

GaloisField::Elem GaloisField::add_digits(Elem a, Elem b) const {
  Elem result = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < d_; ++i) {
    unsigned s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    result += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return result;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("GaloisField: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

GaloisField::Elem GaloisField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::uint64_t GaloisField::element_order(Elem a) const {
  if (a == 0) throw InvalidArgument("GaloisField: order of zero");
  return (q_ - 1) / nt::gcd(q_ - 1, log_[a]);
}

std::string GaloisField::to_string(Elem a) const {
  if (d_ == 1) return std::to_string(a);
  // Polynomial in the generator of the extension, e.g. "2*x^2+x+1".
  Digits digits = to_digits(a, p_, d_);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << digits[i];
      continue;
    }
    if (digits[i] != 1) out << digits[i] << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return first ? "0" : out.str();
}

FieldPtr build_field(unsigned p, unsigned d) {
  if (p == 2) throw InvalidArgument("characteristic 2 is not supported (p must be odd)");
  if (!nt::is_prime(p)) throw InvalidArgument("build_field: " + std::to_string(p) + " is not prime");
  if (d == 0) throw InvalidArgument("build_field: degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw InvalidArgument("build_field: GF(" + std::to_string(p) + "^" + std::to_string(d) +
                            ") exceeds the supported size");
  }

  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find({p, d}); it != cache.end()) return it->second;

  auto field = std::make_shared<GaloisField>();
  field->p_ = p;
  field->d_ = d;
  field->q_ = static_cast<std::uint32_t>(q);

  Digits modulus;
  if (d == 1) {
    modulus = {0, 1};
  } else {
    for (std::uint32_t low = 0; low < q; ++low) {
      Digits cand = to_digits(low, p, d);
      cand.push_back(1);
      if (cand[0] != 0 && is_irreducible(cand, p)) {
        modulus = cand;
        break;
      }
    }
    if (modulus.empty()) throw InternalError("build_field: no irreducible modulus found");
  }
  field->modulus_ = modulus;

  auto mul_codes = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (d == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    Digits prod = poly_mod(poly_mul(to_digits(a, p, d), to_digits(b, p, d), p), modulus, p);
    prod.resize(d, 0);
    return to_code(prod, p);
  };

  const std::uint32_t order = field->q_ - 1;
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g;
    std::uint32_t k = 1;
    while (x != 1) {
      x = mul_codes(x, g);
      ++k;
    }
    if (k == order) {
      field->primitive_ = g;
      break;
    }
  }
  field->exp_.resize(2 * static_cast<std::size_t>(order));
  field->log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    field->exp_[k] = x;
    field->exp_[k + order] = x;
    field->log_[x] = k;
    x = mul_codes(x, field->primitive_);
  }
  field->neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Digits dg = to_digits(a, p, d);
    for (auto& c : dg) c = (p - c) % p;
    field->neg_[a] = to_code(dg, p);
  }
  if (d > 1 && q <= 1024) {
    field->add_table_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) field->add_table_[a * q + b] = field->add_digits(a, b);
  }
  cache.emplace(std::make_pair(p, d), field);
  return field;
}

unsigned next_prime_congruent_one(unsigned m, unsigned lower_bound) {
  if (m == 0) throw InvalidArgument("next_prime_congruent_one: m must be positive");
  std::uint64_t q = (static_cast<std::uint64_t>(lower_bound) / m + 1) * m + 1;
  while (!nt::is_prime(q) || q == 2) q += m;
  return static_cast<unsigned>(q);
}

}  // namespace hopfbrauer
