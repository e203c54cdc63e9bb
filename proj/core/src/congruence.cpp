#include "taukit/congruence.hpp"

#include <cmath>
#include <stdexcept>

#include "taukit/arith.hpp"

namespace taukit {

namespace {

// tau(p) for the primes that need individual treatment in the class sieve.
struct SmallPrime {
    std::uint64_t p;
    long tau_p;
};
constexpr SmallPrime kSmallPrimes[] = {
    {2, -24}, {3, 252}, {5, 4830}, {7, -16744}, {23, 18643272},
};

// u_d of the Hecke recurrence mod m, from seeds u_1 = 1, u_2 = A and
// Q = p^11, everything reduced mod m.
long u_d_mod(long A, long Q, unsigned long d, long m) {
    auto red = [m](long v) { long r = v % m; return r < 0 ? r + m : r; };
    if (d == 1) return red(1);
    long prev = 1, cur = red(A);
    for (unsigned long i = 2; i < d; ++i) {
        long next = red(A * cur - Q * prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

// Residues of tau(p) and p^11 mod m as functions of the residue class r of a
// generic prime p (p coprime to m), for m in {3, 4, 5, 7}.
std::pair<long, long> generic_seed(unsigned m, long r) {
    long A = 0;
    switch (m) {
        case 3: A = (r * r % 3) * ((r + 1) % 3) % 3; break;
        case 4: A = (r * r % 4 * r % 4) * ((r + 1) % 4) % 4; break;
        case 5: A = r * ((1 + r) % 5) % 5; break;
        case 7: A = r * ((1 + r * r % 7 * r) % 7) % 7; break;
        default: throw std::logic_error("generic_seed: bad modulus");
    }
    long Q = static_cast<long>(powmod(static_cast<std::uint64_t>(r), 11, m));
    return {A % m, Q};
}

const std::vector<long>& generic_residues(unsigned m) {
    static const std::vector<long> r3{1, 2}, r4{1, 3}, r5{1, 2, 3, 4}, r7{1, 2, 3, 4, 5, 6};
    switch (m) {
        case 3: return r3;
        case 4: return r4;
        case 5: return r5;
        case 7: return r7;
        default: throw std::logic_error("generic_residues: bad modulus");
    }
}

// Values tau(p^{d-1}) mod m can take over generic primes p (p coprime to the
// small moduli set and p != 23).
std::set<long> generic_values(unsigned m, unsigned long d) {
    std::set<long> out;
    if (m == 23) {
        // class c determines tau(p) mod 23 and the Legendre symbol p^11 mod 23
        for (long c : {0L, 2L, -1L}) {
            long Q = (c == 0) ? 22 : 1;  // nonresidue iff class 0
            out.insert(u_d_mod(c, Q, d, 23));
        }
        return out;
    }
    for (long r : generic_residues(m)) {
        auto [A, Q] = generic_seed(m, r);
        out.insert(u_d_mod(A, Q, d, static_cast<long>(m)));
    }
    return out;
}

long small_prime_value(const SmallPrime& sp, unsigned m, unsigned long d) {
    long Q = static_cast<long>(powmod(sp.p % m, 11, m));
    return u_d_mod(sp.tau_p % static_cast<long>(m), Q, d, static_cast<long>(m));
}

constexpr unsigned kModuli[] = {3, 4, 5, 7, 23};

}  // namespace

std::array<long, 4> tau_mod_formulas(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("tau_mod_formulas: n must be >= 1");
    std::uint64_t s1 = sigma1(n), s3 = sigma3(n);
    long m3 = static_cast<long>(n % 3 * (n % 3) % 3 * (s1 % 3) % 3);
    long m4 = static_cast<long>(n % 4 * (n % 4) % 4 * (n % 4) % 4 * (s1 % 4) % 4);
    long m5 = static_cast<long>(n % 5 * (s1 % 5) % 5);
    long m7 = static_cast<long>(n % 7 * (s3 % 7) % 7);
    return {m3, m4, m5, m7};
}

long tau_p_mod23(std::uint64_t p) {
    if (p == 23) throw std::invalid_argument("tau_p_mod23: p = 23 follows a separate rule");
    if (legendre(static_cast<std::int64_t>(p % 23), 23) == -1) return 0;
    for (std::uint64_t b = 0; 23 * b * b <= p; ++b) {
        std::uint64_t rest = p - 23 * b * b;
        std::uint64_t a = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
        for (std::uint64_t c = (a > 1 ? a - 1 : 0); c <= a + 1; ++c)
            if (c * c == rest) return 2;
    }
    return -1;
}

std::set<long> allowed_residues(unsigned long d, unsigned m) {
    if (d < 1) throw std::invalid_argument("allowed_residues: d must be >= 1");
    long dl = static_cast<long>(d);
    auto norm = [](std::set<long> s, long mod) {
        std::set<long> out;
        for (long v : s) { long r = v % mod; out.insert(r < 0 ? r + mod : r); }
        return out;
    };
    bool odd = d % 2 == 1;
    switch (m) {
        case 12: {
            // component conditions mod 3 and mod 4, combined by CRT
            std::set<long> s3 = odd ? std::set<long>{0, 1, dl} : std::set<long>{0, dl};
            std::set<long> s4 = s3;
            s3 = norm(s3, 3);
            s4 = norm(s4, 4);
            std::set<long> out;
            for (long x = 0; x < 12; ++x)
                if (s3.count(x % 3) && s4.count(x % 4)) out.insert(x);
            return out;
        }
        case 5:
            if (odd) return norm(d % 4 == 1 ? std::set<long>{0, 1, dl} : std::set<long>{0, 1, 2, 3, dl}, 5);
            return norm(d % 4 == 0 ? std::set<long>{0, dl} : std::set<long>{0, 1, 2, dl}, 5);
        case 7:
            if (odd) return norm(d % 6 == 1 ? std::set<long>{0, 1, dl} : std::set<long>{0, 1, 2, 4, dl, 2 * dl, 4 * dl}, 7);
            return norm(d % 6 == 4 ? std::set<long>{0, dl} : std::set<long>{0, dl, 2 * dl, 4 * dl}, 7);
        case 23:
            if (odd) {
                if (d % 6 == 1) return norm({1, dl}, 23);
                if (d % 6 == 3) return norm({0, 1, dl}, 23);
                return norm({1, -1, dl}, 23);
            }
            if (d % 6 == 0) return norm({0, dl}, 23);
            if (d % 6 == 2) return norm({0, -1, dl}, 23);
            return norm({0, 1, dl}, 23);
        default:
            throw std::invalid_argument("allowed_residues: modulus must be one of 12, 5, 7, 23");
    }
}

SieveVerdict sieve_prime_power_target(const Integer& a, unsigned long d) {
    if (a == 0) throw std::invalid_argument("sieve_prime_power_target: a must be nonzero");
    if (d < 2) throw std::invalid_argument("sieve_prime_power_target: d must be >= 2");

    SieveVerdict verdict;

    // generic primes: residue coordinates mod 3, 4, 5, 7 and the mod-23 class
    // are independent, so each modulus can be checked on its own
    bool generic_ok = true;
    std::vector<std::string> generic_fail;
    for (unsigned m : kModuli) {
        long target = mod_l(a, static_cast<long>(m));
        if (!generic_values(m, d).count(target)) {
            generic_ok = false;
            generic_fail.push_back("mod " + std::to_string(m) + ": residue " + std::to_string(target) +
                                   " unreachable for generic p");
        }
    }
    if (generic_ok) {
        verdict.pass = true;
        return verdict;
    }

    // individual small primes must satisfy every modulus at once
    for (const SmallPrime& sp : kSmallPrimes) {
        bool ok = true;
        for (unsigned m : kModuli) {
            if (small_prime_value(sp, m, d) != mod_l(a, static_cast<long>(m))) { ok = false; break; }
        }
        if (ok) {
            verdict.pass = true;
            return verdict;
        }
    }
    verdict.pass = false;
    verdict.reasons = std::move(generic_fail);
    return verdict;
}

std::vector<Survivor> reproduce_survivors_theorem1(int eps, unsigned long ell_max,
                                                   const TauTable& table) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("reproduce_survivors_theorem1: eps must be +-1");
    std::vector<Survivor> out;
    for (std::uint64_t ell : primes_up_to(ell_max - 1)) {
        if (ell <= 252) continue;  // odd tau-values that small are already impossible
        if (!table.is_ordinary(ell)) continue;
        std::uint64_t m = ell * ell - 1;
        std::vector<std::uint64_t> ds;
        std::uint64_t rest = m;
        for (std::uint64_t q = 2; q * q <= rest; ++q) {
            if (rest % q) continue;
            while (rest % q == 0) rest /= q;
            if (q % 2 == 1) ds.push_back(q);
        }
        if (rest > 2) ds.push_back(rest);
        for (std::uint64_t d : ds) {
            Integer a = eps * Integer(static_cast<unsigned long>(ell));
            if (sieve_prime_power_target(a, d).pass)
                out.push_back({eps, ell, d});
        }
    }
    return out;
}

std::set<unsigned long> reproduce_L_set(unsigned t, int eps, unsigned long ell_max,
                                        bool restrict_t2) {
    if (t != 1 && t != 2 && t != 4 && t != 8)
        throw std::invalid_argument("reproduce_L_set: t must be in {1, 2, 4, 8}");
    std::set<unsigned long> out;
    for (std::uint64_t ell : primes_up_to(ell_max - 1)) {
        if (ell == 2) continue;
        if (t == 2 && restrict_t2 && ell <= 100) continue;
        Integer a = eps * Integer(static_cast<unsigned long>(t * ell));
        if (sieve_prime_power_target(a, 2).pass) out.insert(ell);
    }
    return out;
}

AdmissibilityReport admissible_prime(std::uint64_t p, int eps, unsigned t, unsigned long ell) {
    AdmissibilityReport rep;
    rep.p = p;
    rep.eps = eps;
    rep.t = t;
    rep.ell = ell;
    Integer a = eps * Integer(static_cast<unsigned long>(t) * ell);
    auto formulas = tau_mod_formulas(p);
    const unsigned ms[4] = {3, 4, 5, 7};
    bool all = true;
    for (int i = 0; i < 4; ++i) {
        long target = mod_l(a, static_cast<long>(ms[i]));
        bool ok = formulas[static_cast<std::size_t>(i)] == target;
        rep.verdicts.push_back({ms[i], ok,
                                "tau(p) = " + std::to_string(formulas[static_cast<std::size_t>(i)]) +
                                    " mod " + std::to_string(ms[i]) + ", target " + std::to_string(target)});
        all = all && ok;
    }
    long target23 = mod_l(a, 23);
    bool ok23;
    std::string detail;
    if (p == 23) {
        ok23 = target23 == 1;
        detail = "p = 23: tau(p) = 1 mod 23";
    } else {
        long cls = tau_p_mod23(p);
        long clsr = cls < 0 ? cls + 23 : cls;
        ok23 = clsr == target23;
        detail = "class " + std::to_string(cls) + " mod 23, target " + std::to_string(target23);
    }
    rep.verdicts.push_back({23, ok23, detail});
    rep.pass = all && ok23;
    return rep;
}

nlohmann::json residue_rules_json(unsigned long d_max) {
    nlohmann::json j;
    for (unsigned m : {12u, 5u, 7u, 23u}) {
        nlohmann::json rules = nlohmann::json::array();
        for (unsigned long d = 1; d <= d_max; ++d) {
            nlohmann::json r;
            r["d"] = d;
            r["allowed"] = allowed_residues(d, m);
            rules.push_back(r);
        }
        j["mod_" + std::to_string(m)] = rules;
    }
    j["p23_clause"] = "tau(23^{d-1}) = 1 mod 23 for every d";
    return j;
}

}  // namespace taukit
