#include "taukit/lucas.hpp"

#include <stdexcept>

namespace taukit {

LucasContext make_context(Integer A, Integer Q) {
    if (A == 0 || Q == 0) throw std::invalid_argument("make_context: A and Q must be nonzero");
    if (gcd(A, Q) != 1) throw std::invalid_argument("make_context: A and Q must be coprime");
    Integer A2 = A * A;
    // alpha/beta is a root of unity exactly when A^2 is 0, Q, 2Q, 3Q or 4Q
    for (int k = 0; k <= 4; ++k) {
        if (A2 == k * Q) throw std::invalid_argument("make_context: degenerate pair (A^2 = " +
                                                     std::to_string(k) + "Q)");
    }
    Integer D = A2 - 4 * Q;
    return {std::move(A), std::move(Q), std::move(D)};
}

LucasContext tau_context(std::uint64_t p, const TauTable& table) {
    if (!table.is_ordinary(p))
        throw std::invalid_argument("tau_context: p divides tau(p)");
    return make_context(table.at(p), pow_ui(Integer(static_cast<unsigned long>(p)), 11));
}

Integer u_n(const LucasContext& ctx, unsigned long n) {
    if (n < 1) throw std::invalid_argument("u_n: n must be >= 1");
    Integer prev = 1, cur = ctx.A;
    if (n == 1) return prev;
    for (unsigned long i = 2; i < n; ++i) {
        Integer next = ctx.A * cur - ctx.Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Integer> u_terms(const LucasContext& ctx, unsigned long n) {
    std::vector<Integer> out;
    out.reserve(n);
    Integer prev = 1, cur = ctx.A;
    out.push_back(prev);
    for (unsigned long i = 2; i <= n; ++i) {
        out.push_back(cur);
        Integer next = ctx.A * cur - ctx.Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

std::uint64_t u_n_mod(const LucasContext& ctx, unsigned long n, std::uint64_t m) {
    Integer prev = 1, cur = ctx.A % static_cast<unsigned long>(m);
    if (n == 1) return mod_u64(prev, m);
    Integer A = ctx.A % static_cast<unsigned long>(m), Q = ctx.Q % static_cast<unsigned long>(m);
    for (unsigned long i = 2; i < n; ++i) {
        Integer next = (A * cur - Q * prev) % static_cast<unsigned long>(m);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return mod_u64(cur, m);
}

std::optional<unsigned long> rank_of_apparition(const LucasContext& ctx, const Integer& ell) {
    if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("rank_of_apparition: ell must be an odd prime");
    if (mpz_divisible_p(ctx.Q.get_mpz_t(), ell.get_mpz_t()))
        throw std::invalid_argument("rank_of_apparition: ell divides Q, rank may not exist");
    Integer A = ctx.A % ell, Q = ctx.Q % ell;
    Integer prev = 1, cur = A;
    unsigned long cap = 4 * (mpz_get_ui(ell.get_mpz_t()) + 1);
    for (unsigned long m = 2; m <= cap; ++m) {
        if (cur % ell == 0) return m;
        Integer next = (A * cur - Q * prev) % ell;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return std::nullopt;  // not reached when ell does not divide A*Q
}

PrimitiveDivisors primitive_prime_divisors(const LucasContext& ctx, unsigned long n,
                                           const FactorConfig& cfg) {
    if (n <= 2) throw std::invalid_argument("primitive_prime_divisors: n must be > 2");
    PrimitiveDivisors out;
    Integer un = u_n(ctx, n);
    if (un == 1 || un == -1) return out;
    Factorization f = factor(un, cfg);
    out.complete = f.complete;
    out.unknown = f.remaining;
    for (const auto& [q, e] : f.factors) {
        if (mpz_divisible_p(ctx.D.get_mpz_t(), q.get_mpz_t())) continue;
        // q | u_i for some i < n would make q imprimitive; u_i mod q is cheap
        bool primitive = true;
        Integer A = ctx.A % q, Q = ctx.Q % q;
        Integer prev = 1, cur = A;
        for (unsigned long i = 2; i < n && primitive; ++i) {
            if (cur % q == 0) primitive = false;
            Integer next = (A * cur - Q * prev) % q;
            prev = std::move(cur);
            cur = std::move(next);
        }
        if (primitive) out.primes.push_back(q);
    }
    return out;
}

std::optional<bool> is_defective(const LucasContext& ctx, unsigned long n,
                                 const FactorConfig& cfg) {
    PrimitiveDivisors pd = primitive_prime_divisors(ctx, n, cfg);
    if (!pd.primes.empty()) return false;
    if (!pd.complete) return std::nullopt;
    return true;
}

}  // namespace taukit
