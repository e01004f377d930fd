#include "hopfbrauer/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto im : images_) {
    if (im >= images_.size() || seen[im])
      throw InvalidArgument("Perm: image sequence is not a bijection");
    seen[im] = true;
  }
}

Perm Perm::from_cycles(const std::vector<std::vector<std::size_t>>& cycles,
                       std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t from = cycle[k];
      std::size_t to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw InvalidArgument("Perm: point " + std::to_string(from) +
                              " outside 1.." + std::to_string(degree));
      if (used[from - 1]) throw InvalidArgument("Perm: cycles are not disjoint");
      used[from - 1] = true;
      images[from - 1] = static_cast<Point>(to - 1);
    }
  }
  return Perm(std::move(images));
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  if (i == text.size()) throw InvalidArgument("Perm::parse: empty input");
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidArgument("Perm::parse: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw InvalidArgument("Perm::parse: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidArgument("Perm::parse: unexpected character in \"" + std::string(text) + "\"");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<std::size_t>(text[i++] - '0');
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(cycles, degree);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm result(degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::size_t Perm::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = nt::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("Perm: degree mismatch in product");
  Perm r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

std::size_t element_order(const Perm& g) { return g.order(); }

PParts p_parts(const Perm& g, unsigned p) {
  if (!nt::is_prime(p)) throw InvalidArgument("p_parts: p must be prime");
  const std::uint64_t n = g.order();
  std::uint64_t pa = 1;
  std::uint64_t m = n;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  // u = g^(alpha m), alpha m = 1 mod p^a; s = g^(beta p^a), beta p^a = 1 mod m.
  std::uint64_t u_exp = 0;
  std::uint64_t s_exp = 0;
  if (pa == 1) {
    s_exp = 1;
  } else if (m == 1) {
    u_exp = 1;
  } else {
    auto alpha = static_cast<std::uint64_t>(nt::inverse_mod(static_cast<std::int64_t>(m % pa),
                                                            static_cast<std::int64_t>(pa)));
    auto beta = static_cast<std::uint64_t>(nt::inverse_mod(static_cast<std::int64_t>(pa % m),
                                                           static_cast<std::int64_t>(m)));
    u_exp = alpha * m % n;
    s_exp = beta * pa % n;
  }
  return {g.pow(static_cast<long long>(u_exp)), g.pow(static_cast<long long>(s_exp))};
}

std::size_t PermHash::operator()(const Perm& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto im : g.images()) {
    h ^= im;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hopfbrauer
