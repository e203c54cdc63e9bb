#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "taukit/bigint.hpp"
#include "taukit/tau_table.hpp"

#include <json.hpp>

namespace taukit {

// Residues of n^2 sigma_1(n) mod 3, n^3 sigma_1(n) mod 4, n sigma_1(n) mod 5,
// n sigma_3(n) mod 7. Each equals tau(n) mod the respective modulus.
std::array<long, 4> tau_mod_formulas(std::uint64_t n);

// Trichotomy class of tau(p) mod 23 for prime p != 23:
//   0  if p is a quadratic nonresidue mod 23,
//   2  if p = a^2 + 23 b^2,
//  -1  otherwise.
long tau_p_mod23(std::uint64_t p);

// Residue table for tau(p^{d-1}) mod m, m in {12, 5, 7, 23}, valid for every
// prime p (p = 23 is handled by the caller via the separate clause).
// The mod-12 set is the pair of mod-3 and mod-4 conditions combined by CRT.
std::set<long> allowed_residues(unsigned long d, unsigned m);

struct SieveVerdict {
    bool pass = false;
    std::vector<std::string> reasons;  // per-modulus failure notes when failing
};

// Can tau(p^{d-1}) = a hold for some prime p, as far as the congruence
// conditions mod 3, 4, 5, 7, 23 can tell? Decided by exact enumeration of the
// residue classes of p (with p in {2, 3, 5, 7, 23} treated individually).
SieveVerdict sieve_prime_power_target(const Integer& a, unsigned long d);

struct Survivor {
    int eps;
    unsigned long ell;
    unsigned long d;
    auto operator<=>(const Survivor&) const = default;
};

// Candidate pairs (ell, d) with 252 < ell < ell_max ordinary, d >= 3 an odd
// prime dividing ell^2 - 1, that survive the congruence sieve for
// tau(p^{d-1}) = eps * ell.
std::vector<Survivor> reproduce_survivors_theorem1(int eps, unsigned long ell_max,
                                                   const TauTable& table);

// Odd primes ell < ell_max for which tau(p) = eps * t * ell is congruence
// consistent. For t = 2 the range ell <= 100 is skipped when restrict_t2 is
// set (those values are already known to be missed).
std::set<unsigned long> reproduce_L_set(unsigned t, int eps, unsigned long ell_max,
                                        bool restrict_t2 = true);

struct ModulusVerdict {
    unsigned modulus;
    bool pass;
    std::string detail;
};

struct AdmissibilityReport {
    std::uint64_t p = 0;
    int eps = 1;
    unsigned t = 1;
    unsigned long ell = 0;
    std::vector<ModulusVerdict> verdicts;
    bool pass = false;
};

// Per-modulus consistency of tau(p) = eps * t * ell for a concrete prime p.
AdmissibilityReport admissible_prime(std::uint64_t p, int eps, unsigned t, unsigned long ell);

// The rule tables as JSON, for documentation dumps.
nlohmann::json residue_rules_json(unsigned long d_max = 30);

}  // namespace taukit
