#include "sylsync/arith.hpp"

#include <algorithm>

namespace sylsync {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
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

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  if (n == 0) return 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

unsigned legendre(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  for (std::uint64_t q = p; q <= n; q *= p) {
    v += static_cast<unsigned>(n / q);
    if (q > n / p) break;
  }
  return v;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

bool is_pi_number(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t q : prime_divisors(n))
    if (std::find(primes.begin(), primes.end(), q) == primes.end()) return false;
  return true;
}

bool is_prime_power_of(std::uint64_t n, std::uint64_t p) { return n >= 1 && p_part(n, p) == n; }

}  // namespace sylsync
