#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "taukit/bigint.hpp"

#include <json.hpp>

namespace taukit {

// Residue analysis of x_n = a F_n + b L_n mod q, where F and L are the
// Fibonacci and Lucas numbers. period is the joint period of (F, L) mod q;
// classes holds the residues of n mod period where x_n is an 11th-power
// residue mod q (0 counts as one).
struct FibSieveResult {
    long a = 0;
    long b = 0;
    std::uint64_t q = 0;
    unsigned long period = 0;
    std::set<unsigned long> classes;
};

// q must be an odd prime other than 5. When 11 does not divide q - 1 every
// residue is an 11th power and the result is vacuous (all classes allowed).
FibSieveResult fib_lucas_mod(long a, long b, std::uint64_t q);

// True iff no integer n lies in an admissible class of both results.
bool crt_incompatible(const FibSieveResult& r1, const FibSieveResult& r2);

// Exclusion certificate for tau(p^4) = a via the quadratic field of
// discriminant 5: a = eps * ell with ell = u^2 - 5 v^2, and (+-p)^11 must be a
// value of u F_n + v L_n, which the modular scan rules out.
struct DjCertificate {
    Integer target;
    long u = 0;
    long v = 0;
    std::vector<FibSieveResult> used;
    bool excluded = false;
    bool inconclusive = false;
};

// prime_pool: candidate moduli; by default primes q = 1 mod 11, q <= 2000.
DjCertificate dj_exclude(const Integer& a, long u, long v,
                         const std::vector<std::uint64_t>& prime_pool = {});

// Small search for a generator pair (u, v) with u^2 - 5 v^2 = |a|.
bool find_ideal_generator(const Integer& a, long& u, long& v);

std::vector<std::uint64_t> default_dj_pool();

nlohmann::json to_json(const DjCertificate& c);

}  // namespace taukit
