#include <doctest.h>

#include <algorithm>

#include "taukit/arith.hpp"
#include "taukit/congruence.hpp"
#include "taukit/tau_table.hpp"

using namespace taukit;

namespace {

const TauTable& table() {
    static TauTable t = TauTable::expand(10'000);
    return t;
}

// tau(p^{d-1}) mod m through the recurrence, entirely in machine words.
long tau_pp_mod(std::uint64_t p, unsigned long d, long m) {
    long A = mod_l(table().at(p), m);
    long Q = static_cast<long>(powmod(p % static_cast<std::uint64_t>(m), 11,
                                      static_cast<std::uint64_t>(m)));
    long prev = 1 % m, cur = A;
    if (d == 1) return prev;
    for (unsigned long i = 2; i < d; ++i) {
        long next = ((A * cur - Q * prev) % m + m) % m;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

TEST_CASE("closed-form residues match exact tau for n <= 10^4") {
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        auto f = tau_mod_formulas(n);
        CHECK(mod_l(table().at(n), 3) == f[0]);
        CHECK(mod_l(table().at(n), 4) == f[1]);
        CHECK(mod_l(table().at(n), 5) == f[2]);
        CHECK(mod_l(table().at(n), 7) == f[3]);
    }
}

TEST_CASE("mod-23 trichotomy against exact values") {
    for (std::uint64_t p : primes_up_to(2000)) {
        if (p == 23) {
            CHECK(mod_l(table().at(p), 23) == 1);
            continue;
        }
        long cls = tau_p_mod23(p);
        long expect = cls < 0 ? cls + 23 : cls;
        CHECK(mod_l(table().at(p), 23) == expect);
    }
    CHECK(tau_p_mod23(59) == 2);  // 59 = 6^2 + 23
    CHECK_THROWS(tau_p_mod23(23));
}

TEST_CASE("residue tables are sound for p <= 10^4, d <= 30") {
    for (std::uint64_t p : primes_up_to(10'000)) {
        for (unsigned long d = 1; d <= 30; ++d) {
            long r12 = tau_pp_mod(p, d, 12);
            long r5 = tau_pp_mod(p, d, 5);
            long r7 = tau_pp_mod(p, d, 7);
            CHECK(allowed_residues(d, 12).count(r12));
            CHECK(allowed_residues(d, 5).count(r5));
            CHECK(allowed_residues(d, 7).count(r7));
            if (p == 23) {
                CHECK(tau_pp_mod(p, d, 23) == 1);
            } else {
                CHECK(allowed_residues(d, 23).count(tau_pp_mod(p, d, 23)));
            }
        }
    }
}

TEST_CASE("class sieve agrees with reality on realized prime-power values") {
    // every value actually taken by tau(p^{d-1}) must pass the sieve
    for (std::uint64_t p : primes_up_to(200)) {
        for (unsigned long d = 2; d <= 6; ++d) {
            Integer v = tau_prime_power(table().at(p), Integer(static_cast<unsigned long>(p)), d - 1);
            if (v == 0) continue;
            CAPTURE(p);
            CAPTURE(d);
            CHECK(sieve_prime_power_target(v, d).pass);
        }
    }
}

TEST_CASE("survivor pairs for odd prime targets") {
    using P = std::pair<unsigned long, unsigned long>;
    auto pairs = [](const std::vector<Survivor>& v) {
        std::vector<P> out;
        for (const Survivor& s : v) out.push_back({s.ell, s.d});
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<P> plus = {{277, 3},  {277, 23}, {281, 5},  {421, 7},  {461, 5},  {463, 3},
                           {601, 3},  {631, 79}, {691, 3},  {827, 23}, {827, 59}, {877, 3},
                           {967, 3},  {967, 7},  {967, 11}, {967, 23}};
    std::vector<P> minus = {{367, 23}, {443, 17}, {503, 3},  {599, 5},  {643, 23}, {643, 107},
                            {827, 3},  {827, 59}, {829, 23}, {829, 83}, {919, 5},  {919, 17}};
    CHECK(pairs(reproduce_survivors_theorem1(1, 1000, table())) == plus);
    CHECK(pairs(reproduce_survivors_theorem1(-1, 1000, table())) == minus);
}

TEST_CASE("d = 3 survivors are not residue-excludable: realized witnesses") {
    // each cubic survivor has a prime whose tau(p^2) matches the target in
    // every modulus the sieve uses, so no refinement of these residue
    // conditions can remove it
    struct W { int eps; unsigned long ell; std::uint64_t p; };
    std::vector<W> witnesses = {{1, 277, 383},  {1, 463, 3821}, {1, 601, 599}, {1, 691, 149},
                                {1, 877, 3923}, {1, 967, 293},  {-1, 503, 6803}, {-1, 827, 11}};
    for (const W& w : witnesses) {
        CAPTURE(w.ell);
        for (long m : {3L, 4L, 5L, 7L, 23L}) {
            long target = ((w.eps * static_cast<long>(w.ell)) % m + m) % m;
            CHECK(tau_pp_mod(w.p, 3, m) == target);
        }
    }
}

TEST_CASE("prime-argument residue sets for even targets") {
    using S = std::set<unsigned long>;
    CHECK(reproduce_L_set(2, 1, 1000) == S{});
    CHECK(reproduce_L_set(2, -1, 1000) == S{587});
    CHECK(reproduce_L_set(4, 1, 1000) == S{23, 449, 569, 863});
    CHECK(reproduce_L_set(4, -1, 1000) == S{241, 397, 811});
    CHECK(reproduce_L_set(8, 1, 1000) == S{457});
    CHECK(reproduce_L_set(8, -1, 1000) == S{3, 293, 983});
}

TEST_CASE("per-prime admissibility report") {
    // tau(2) = -24 = -8 * 3: p = 2 must pass for that target
    AdmissibilityReport r = admissible_prime(2, -1, 8, 3);
    CHECK(r.pass);
    REQUIRE(r.verdicts.size() == 5);
    // and must fail for the sign-flipped target
    CHECK(!admissible_prime(2, 1, 8, 3).pass);
}

TEST_CASE("rule table export") {
    auto j = residue_rules_json(10);
    CHECK(j.contains("mod_12"));
    CHECK(j.contains("mod_23"));
    CHECK(j["mod_5"].size() == 10);
}
