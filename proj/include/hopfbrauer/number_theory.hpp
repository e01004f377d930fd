#pragma once

#include <cstdint>
#include <vector>

namespace hopfbrauer::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::vector<std::uint64_t> divisors(std::uint64_t n);       // ascending
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
/// Largest power of p dividing n, as the exponent.
unsigned valuation(std::uint64_t n, std::uint64_t p);
/// Returns (e, ok): ok iff |n| = p^e.
bool is_power_of(std::uint64_t n, std::uint64_t p, unsigned* exponent);
/// Inverse of a modulo m, requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace hopfbrauer::nt
