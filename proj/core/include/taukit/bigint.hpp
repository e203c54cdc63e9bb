#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace taukit {

using Integer = mpz_class;

// Primality for arbitrary-precision integers. Deterministic Miller-Rabin for
// values below 2^64, BPSW plus 40 Miller-Rabin rounds above.
bool is_prime(const Integer& n);

Integer pow_ui(const Integer& base, unsigned long exp);

// Decompose v >= 2 as ell^m with ell prime and m maximal.
// Returns std::nullopt if v is not a prime power.
std::optional<std::pair<Integer, unsigned long>> prime_power_decompose(const Integer& v);

// v mod m as a value in [0, m).
std::uint64_t mod_u64(const Integer& v, std::uint64_t m);

// Signed residue helpers used by the congruence tables.
long mod_l(const Integer& v, long m);

}  // namespace taukit
