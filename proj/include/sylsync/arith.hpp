#pragma once

#include <cstdint>
#include <vector>

namespace sylsync {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Exponent of p in n.
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// Exponent of p in n! (Legendre).
unsigned legendre(std::uint64_t n, std::uint64_t p);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// True when every prime divisor of n lies in `primes` (n = 1 qualifies).
bool is_pi_number(std::uint64_t n, const std::vector<std::uint64_t>& primes);

bool is_prime_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace sylsync
