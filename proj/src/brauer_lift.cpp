#include "hopfbrauer/brauer_lift.hpp"

#include "hopfbrauer/errors.hpp"
#include "hopfbrauer/number_theory.hpp"

namespace hopfbrauer {

GaloisField::Elem BrauerLift::power(long long j) const {
  long long r = j % static_cast<long long>(m);
  if (r < 0) r += m;
  return field->pow(omega, static_cast<std::uint64_t>(r));
}

Cyc BrauerLift::lift(GaloisField::Elem root) const {
  if (root >= dlog.size() || dlog[root] < 0)
    throw InvalidArgument("BrauerLift: " + field->to_string(root) + " is not an m-th root of unity");
  return Cyc::zeta(m, dlog[root]);
}

BrauerLift build_lift(unsigned p, unsigned m) {
  if (m == 0) throw InvalidArgument("build_lift: m must be positive");
  if (nt::gcd(m, p) != 1)
    throw InvalidArgument("build_lift: m = " + std::to_string(m) + " is not prime to p = " + std::to_string(p));
  const auto d = m == 1 ? 1u : static_cast<unsigned>(nt::multiplicative_order(p, m));
  return make_lift(build_field(p, d), m);
}

BrauerLift make_lift(const FieldPtr& field, unsigned m) {
  const std::uint32_t q = field->size();
  if (m == 0 || (q - 1) % m != 0)
    throw InvalidArgument("make_lift: " + std::to_string(m) + " does not divide q - 1 = " +
                          std::to_string(q - 1));
  BrauerLift lift;
  lift.field = field;
  lift.m = m;
  lift.omega = field->exp((q - 1) / m);
  lift.dlog.assign(q, -1);
  GaloisField::Elem x = 1;
  for (unsigned j = 0; j < m; ++j) {
    if (lift.dlog[x] != -1) throw InternalError("make_lift: root of unity has wrong order");
    lift.dlog[x] = static_cast<int>(j);
    x = field->mul(x, lift.omega);
  }
  if (x != 1) throw InternalError("make_lift: root of unity has wrong order");
  return lift;
}

namespace {

std::vector<long> eigen_multiplicities(const FFMatrix& a, const BrauerLift& lift, std::size_t* total) {
  if (a.field() != lift.field) throw InvalidArgument("brauer_value: matrix and lift over different fields");
  std::vector<long> mult(lift.m, 0);
  std::size_t sum = 0;
  for (unsigned j = 0; j < lift.m; ++j) {
    const auto k = nullity(a - FFMatrix::scalar(a.field(), a.rows(), lift.power(j)));
    mult[j] = static_cast<long>(k);
    sum += k;
  }
  *total = sum;
  return mult;
}

}  // namespace

Cyc brauer_value(const FFMatrix& a, const BrauerLift& lift) {
  if (!a.square()) throw InvalidArgument("brauer_value: matrix not square");
  if (!power(a, lift.m).is_identity())
    throw InternalError("brauer_value: matrix order does not divide " + std::to_string(lift.m));
  std::size_t total = 0;
  auto mult = eigen_multiplicities(a, lift, &total);
  if (total != a.rows()) throw InternalError("brauer_value: eigenspaces do not fill the space");
  return Cyc::from_multiplicities(lift.m, mult);
}

Cyc lifted_trace(const FFMatrix& a, const BrauerLift& lift) {
  if (!a.square()) throw InvalidArgument("lifted_trace: matrix not square");
  if (!(power(a, lift.m + 1) == a))
    throw InternalError("lifted_trace: A^(m+1) != A for m = " + std::to_string(lift.m));
  std::size_t total = 0;
  auto mult = eigen_multiplicities(a, lift, &total);
  if (total + nullity(a) != a.rows()) throw InternalError("lifted_trace: matrix not diagonalizable");
  return Cyc::from_multiplicities(lift.m, mult);
}

GaloisField::Elem reduce(const Cyc& c, const BrauerLift& lift) {
  if (lift.m % c.conductor() != 0)
    throw InvalidArgument("reduce: conductor " + std::to_string(c.conductor()) + " does not divide " +
                          std::to_string(lift.m));
  const GaloisField& f = *lift.field;
  const Cyc full = c.promote(lift.m);
  const auto& coeffs = full.coefficients();
  const long p = f.characteristic();
  GaloisField::Elem sum = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const mpz_class num = coeffs[j].get_num() % p;
    const mpz_class den = coeffs[j].get_den() % p;
    if (den == 0) throw InvalidArgument("reduce: coefficient denominator divisible by p");
    const auto n = f.from_int(num.get_si());
    const auto d = f.from_int(den.get_si());
    sum = f.add(sum, f.mul(f.div(n, d), lift.power(static_cast<long long>(j))));
  }
  return sum;
}

nlohmann::json lift_to_json(const BrauerLift& lift) {
  const GaloisField& f = *lift.field;
  nlohmann::json modulus = nlohmann::json::array();
  for (auto c : f.modulus()) modulus.push_back(c);
  nlohmann::json roots = nlohmann::json::array();
  for (unsigned j = 0; j < lift.m; ++j) roots.push_back(f.to_string(lift.power(j)));
  return {{"p", f.characteristic()},
          {"d", f.degree()},
          {"modulus", modulus},
          {"primitive_element", f.to_string(f.primitive_element())},
          {"m", lift.m},
          {"omega_bar", f.to_string(lift.omega)},
          {"powers", roots}};
}

}  // namespace hopfbrauer
