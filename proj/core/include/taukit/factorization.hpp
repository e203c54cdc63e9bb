#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "taukit/bigint.hpp"

namespace taukit {

struct FactorConfig {
    std::uint64_t trial_limit = 100'000;
    std::uint64_t rho_budget = 100'000'000;  // total iterations per value
    std::uint64_t seed = 0x5eed;
};

// sign * prod factors = value; primes strictly increasing. When the effort
// budget runs out, complete is false and the unfactored cofactors are kept in
// remaining.
struct Factorization {
    Integer value;
    int sign = 1;
    std::vector<std::pair<Integer, unsigned long>> factors;
    std::vector<Integer> remaining;
    bool complete = true;
};

Factorization factor(const Integer& v, const FactorConfig& cfg = {});

// (omega, Omega): distinct and with-multiplicity prime divisor counts.
// Throws on incomplete factorizations.
std::pair<unsigned long, unsigned long> omega_counts(const Factorization& f);

}  // namespace taukit
