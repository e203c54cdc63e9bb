#include "taukit/diophantine.hpp"

#include <stdexcept>

#include "taukit/arith.hpp"

namespace taukit {

TauP4Point taup4_point(std::uint64_t p, const Integer& tau_p) {
    Integer P = static_cast<unsigned long>(p);
    Integer p11 = pow_ui(P, 11);
    TauP4Point pt;
    pt.x = P;
    pt.y = 2 * tau_p * tau_p - 3 * p11;
    pt.a = tau_prime_power(tau_p, P, 4);
    if (pt.y * pt.y != 5 * pow_ui(pt.x, 22) + 4 * pt.a)
        throw std::logic_error("taup4_point: curve identity failed");
    return pt;
}

std::vector<PowerOfThreeSolution> solve_p_squared_eq(std::uint64_t bound_p, unsigned bound_r) {
    std::vector<PowerOfThreeSolution> out;
    for (std::uint64_t p : primes_up_to(bound_p)) {
        for (int eps : {1, -1}) {
            // p^2 - eps p + 1 <= ~2^127 for p <= 10^6, fits unsigned __int128
            unsigned __int128 v = static_cast<unsigned __int128>(p) * p + 1;
            if (eps == 1) v -= p; else v += p;
            unsigned r = 0;
            while (v % 3 == 0) { v /= 3; ++r; }
            if (v == 1 && r <= bound_r) out.push_back({eps, p, r});
        }
    }
    return out;
}

namespace {

// Search t * ell^j = p^d + eps, t in {2, 8}. Parity forces p odd, so p + eps
// is even and u = (p^d + eps)/(p + eps) is odd; hence (p + eps) carries the
// whole factor t and p + eps = t * ell^s for some 0 <= s < j. That makes the
// residual check per candidate cheap: either p + eps = t (the t-family), or
// (p + eps)/t is a power of a single odd prime ell, and then u must be a
// power of ell too, which requires ell | u in the first place.
std::vector<ShiftedPowerSolution> search_shifted_power(unsigned t, std::uint64_t bound_p,
                                                       unsigned long bound_d, unsigned long bound_j) {
    if (bound_d < 3) return {};
    std::vector<ShiftedPowerSolution> out;
    auto spf = smallest_factor_table(static_cast<std::uint32_t>(bound_p / t + 2));

    auto exact_u = [](std::uint64_t p, int eps, unsigned long d) {
        Integer pd = pow_ui(Integer(static_cast<unsigned long>(p)), d);
        return Integer((pd + eps) / static_cast<long>(eps == 1 ? p + 1 : p - 1));
    };

    for (std::uint64_t p : primes_up_to(bound_p)) {
        if (p == 2) continue;  // p^d + eps is odd, never t * ell^j
        for (int eps : {1, -1}) {
            std::uint64_t pe = eps == 1 ? p + 1 : p - 1;
            if (pe % t != 0) continue;
            std::uint64_t h = pe / t;
            if (h % 2 == 0) continue;  // the 2-part of p + eps must be exactly t

            if (h == 1) {
                // p + eps = t: the cofactor u = (p^d + eps)/t itself must be a
                // prime power; only p = 3 (t = 2) or p = 7 (t = 8) get here.
                for (unsigned long d = 3; d <= bound_d; d += 2) {
                    Integer u = exact_u(p, eps, d);
                    if (u <= 1) continue;
                    auto pp = prime_power_decompose(u);
                    if (pp && pp->first % 2 == 1 && pp->second <= bound_j)
                        out.push_back({pp->first, pp->second, p, d, eps});
                }
                continue;
            }

            // Otherwise p + eps = t * ell^s with ell an odd prime, and the odd
            // cofactor u must be a further power of the same ell. u > 1 for
            // d >= 3, so ell | u is necessary; test that with the Lucas
            // recurrence for (alpha, beta) = (p, -eps) mod ell before touching
            // big integers.
            std::uint32_t f = spf[h];
            std::uint64_t rest = h;
            unsigned long s = 0;
            while (rest % f == 0) { rest /= f; ++s; }
            if (rest != 1 || f == 2) continue;
            std::uint64_t ell = f;

            std::uint64_t A = (p % ell + (eps == 1 ? ell - 1 : 1)) % ell;     // p - eps mod ell
            std::uint64_t Q = (eps == 1 ? ell - p % ell : p % ell) % ell;  // -eps*p mod ell
            std::uint64_t prev = 1, cur = A;
            for (unsigned long i = 2; i <= bound_d; ++i) {
                std::uint64_t next = (mulmod(A, cur, ell) + ell - mulmod(Q, prev, ell)) % ell;
                prev = cur;
                cur = next;
                unsigned long d = i + 1;
                if (d > bound_d || d % 2 == 0) continue;
                if (next != 0) continue;
                Integer u = exact_u(p, eps, d);
                Integer rest_big = u;
                unsigned long extra = 0;
                while (rest_big > 1 && mpz_divisible_ui_p(rest_big.get_mpz_t(), ell)) {
                    rest_big /= static_cast<unsigned long>(ell);
                    ++extra;
                }
                if (rest_big == 1 && extra + s <= bound_j)
                    out.push_back({Integer(static_cast<unsigned long>(ell)), extra + s, p, d, eps});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<ShiftedPowerSolution> search_two_ell_power(std::uint64_t bound_p, unsigned long bound_d,
                                                       unsigned long bound_j) {
    return search_shifted_power(2, bound_p, bound_d, bound_j);
}

std::vector<ShiftedPowerSolution> search_eight_ell_power(std::uint64_t bound_p, unsigned long bound_d,
                                                         unsigned long bound_j) {
    return search_shifted_power(8, bound_p, bound_d, bound_j);
}

namespace {

DefectiveCaseBranch check_branch(const Integer& value) {
    DefectiveCaseBranch b;
    b.value = value;
    if (value == 1) {
        b.is_one = true;
        return b;
    }
    auto pp = prime_power_decompose(value);
    if (pp && pp->first % 2 == 1 && pp->second % 2 == 0)
        b.solution = std::make_pair(pp->first, pp->second / 2);
    return b;
}

}  // namespace

DefectiveCaseReport genEVT_defective_check(unsigned long k) {
    if (k < 1) throw std::invalid_argument("genEVT_defective_check: k must be >= 1");
    DefectiveCaseReport rep;
    rep.k = k;
    Integer three = (pow_ui(Integer(3), 2 * k - 1) - 1) / 2;
    Integer seven = (pow_ui(Integer(7), 2 * k - 1) + 1) / 8;
    rep.three_branch = check_branch(three);
    rep.seven_branch = check_branch(seven);
    return rep;
}

}  // namespace taukit
