#pragma once

#include <cstdint>
#include <vector>

namespace taukit {

// Machine-word number theory helpers. Everything here is exact; overflow is
// avoided by doing multiplications in 128-bit.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// All primes <= n, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Smallest-prime-factor table for 0..n (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n);

// Legendre symbol (a/p) for odd prime p; returns -1, 0 or 1.
int legendre(std::int64_t a, std::uint64_t p);

// sigma_1(n) and sigma_3(n). n must be small enough that the result fits
// (n <= ~10^5 for sigma_3).
std::uint64_t sigma1(std::uint64_t n);
std::uint64_t sigma3(std::uint64_t n);
std::uint64_t sigma0(std::uint64_t n);

// v = b^e with e maximal? Returns e >= 1 and sets base; e = 1 when v is not a
// perfect power. v >= 2.
unsigned perfect_power_u64(std::uint64_t v, std::uint64_t& base);

}  // namespace taukit
