#include "taukit/factorization.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace taukit {

namespace {

// Brent-cycle Pollard rho. Returns a nontrivial factor of n (composite, odd,
// no small factors) or 0 if the iteration budget ran out.
Integer rho_factor(const Integer& n, std::mt19937_64& rng, std::uint64_t& budget) {
    while (budget > 0) {
        Integer c = static_cast<unsigned long>(rng() % 1024 + 1);
        Integer x = static_cast<unsigned long>(rng() % 1024 + 2);
        Integer y = x, d = 1, saved = x;
        std::uint64_t power = 1, lam = 0;
        while (d == 1 && budget > 0) {
            if (lam == power) {
                saved = y;
                power <<= 1;
                lam = 0;
            }
            // batch gcd every 64 steps
            Integer acc = 1;
            std::uint64_t steps = std::min<std::uint64_t>(64, power - lam);
            Integer ysnap = y;
            for (std::uint64_t i = 0; i < steps; ++i) {
                y = (y * y + c) % n;
                acc = acc * (saved - y) % n;
            }
            lam += steps;
            budget = budget > steps ? budget - steps : 0;
            d = gcd(acc, n);
            if (d == n) {
                // replay one by one from the snapshot
                y = ysnap;
                d = 1;
                for (std::uint64_t i = 0; i < steps && d == 1; ++i) {
                    y = (y * y + c) % n;
                    d = gcd(Integer(saved - y), n);
                }
                if (d == n) { d = 1; break; }  // bad parameters, retry
            }
        }
        if (d > 1 && d < n) return d;
    }
    return 0;
}

void factor_into(const Integer& n, std::vector<Integer>& primes, std::vector<Integer>& unresolved,
                 std::mt19937_64& rng, std::uint64_t& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    // perfect powers split for free
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                for (unsigned long i = 0; i < e; ++i) factor_into(root, primes, unresolved, rng, budget);
                return;
            }
        }
    }
    Integer d = rho_factor(n, rng, budget);
    if (d == 0) {
        unresolved.push_back(n);
        return;
    }
    factor_into(d, primes, unresolved, rng, budget);
    factor_into(Integer(n / d), primes, unresolved, rng, budget);
}

}  // namespace

Factorization factor(const Integer& v, const FactorConfig& cfg) {
    if (v == 0) throw std::invalid_argument("factor: value must be nonzero");
    Factorization f;
    f.value = v;
    f.sign = v < 0 ? -1 : 1;
    Integer n = abs(v);

    std::vector<Integer> primes;
    for (std::uint64_t p = 2; p <= cfg.trial_limit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= static_cast<unsigned long>(p);
            primes.emplace_back(static_cast<unsigned long>(p));
        }
    }
    if (n > 1) {
        std::mt19937_64 rng(cfg.seed);
        std::uint64_t budget = cfg.rho_budget;
        factor_into(n, primes, f.remaining, rng, budget);
    }
    std::sort(primes.begin(), primes.end());
    for (const Integer& p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    }
    f.complete = f.remaining.empty();
    return f;
}

std::pair<unsigned long, unsigned long> omega_counts(const Factorization& f) {
    if (!f.complete) throw std::invalid_argument("omega_counts: factorization is incomplete");
    unsigned long omega = f.factors.size(), big_omega = 0;
    for (const auto& [p, e] : f.factors) big_omega += e;
    return {omega, big_omega};
}

}  // namespace taukit
