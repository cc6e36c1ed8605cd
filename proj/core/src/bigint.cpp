#include "polycirc/bigint.hpp"

#include <limits>

namespace polycirc {

std::string to_string(const BigInt& value) { return value.str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> prime_divisors(const BigInt& n, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (n <= 1) return out;
  BigInt rest = n;
  for (std::uint64_t d = 2; d <= limit && rest > 1; ++d) {
    if (rest % d != 0) continue;
    out.push_back(d);
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) {
    if (rest <= std::numeric_limits<std::uint64_t>::max()) {
      for (auto q : prime_divisors(rest.convert_to<std::uint64_t>())) out.push_back(q);
    } else {
      // Only reachable when `limit` is too small for the input.
      out.push_back(0);
    }
  }
  return out;
}

BigInt p_part(const BigInt& n, std::uint64_t p) {
  BigInt part = 1;
  BigInt rest = n;
  while (rest != 0 && rest % p == 0) {
    rest /= p;
    part *= p;
  }
  return part;
}

bool is_power_of(const BigInt& n, std::uint64_t p) {
  if (n < 1) return false;
  return p_part(n, p) == n;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  auto primes = prime_divisors(n);
  return primes.size() == 1 ? primes.front() : 0;
}

}  // namespace polycirc
