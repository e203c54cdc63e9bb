#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "taukit/bigint.hpp"
#include "taukit/factorization.hpp"
#include "taukit/tau_table.hpp"

namespace taukit {

// A Lucas pair given by A = alpha + beta and Q = alpha * beta, with
// discriminant D = A^2 - 4Q. Valid contexts have A, Q nonzero coprime and
// alpha/beta not a root of unity.
struct LucasContext {
    Integer A;
    Integer Q;
    Integer D;
};

// Validates and builds a context. Throws std::invalid_argument naming the
// violated clause (zero, non-coprime, degenerate).
LucasContext make_context(Integer A, Integer Q);

// The context with u_i = tau(p^{i-1}); requires p ordinary.
LucasContext tau_context(std::uint64_t p, const TauTable& table);

// u_n with u_1 = 1, u_2 = A, u_i = A u_{i-1} - Q u_{i-2}. n >= 1.
Integer u_n(const LucasContext& ctx, unsigned long n);

// u_1 .. u_n.
std::vector<Integer> u_terms(const LucasContext& ctx, unsigned long n);

// u_n mod m.
std::uint64_t u_n_mod(const LucasContext& ctx, unsigned long n, std::uint64_t m);

// Least m >= 1 with ell | u_m, for odd prime ell not dividing Q. The scan is
// capped at 4(ell+1); when ell does not divide A*Q the rank is known to be at
// most ell + 1, so hitting the cap raises instead of looping forever.
std::optional<unsigned long> rank_of_apparition(const LucasContext& ctx, const Integer& ell);

struct PrimitiveDivisors {
    std::vector<Integer> primes;   // primitive prime divisors of u_n
    std::vector<Integer> unknown;  // unfactored cofactors, if the budget ran out
    bool complete = true;
};

// Primes q | u_n with q not dividing D * u_1 ... u_{n-1}. Primitivity of each
// candidate is tested by residue arithmetic mod q, never by factoring the
// product. n > 2.
PrimitiveDivisors primitive_prime_divisors(const LucasContext& ctx, unsigned long n,
                                           const FactorConfig& cfg = {});

// True iff u_n (n > 2) has no primitive prime divisor. nullopt when the
// factorization of u_n was incomplete and no primitive prime was found.
std::optional<bool> is_defective(const LucasContext& ctx, unsigned long n,
                                 const FactorConfig& cfg = {});

}  // namespace taukit
