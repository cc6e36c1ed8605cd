#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polycirc {

/// Exact integer used for group orders and element orders.
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& value);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of `n` in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Distinct prime divisors of `n`, found by trial division up to `limit`.
/// Any cofactor left above `limit` is appended as-is. Orders of permutation
/// groups of degree d only have prime factors <= d, so `limit = degree` is
/// exact for them.
std::vector<std::uint64_t> prime_divisors(const BigInt& n, std::uint64_t limit);

/// Largest power of `p` dividing `n` (n > 0).
BigInt p_part(const BigInt& n, std::uint64_t p);

/// True iff n == p^k for some k >= 0.
bool is_power_of(const BigInt& n, std::uint64_t p);

/// If n = p^k with p prime and k >= 1, returns p; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

}  // namespace polycirc
