#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taukit/bigint.hpp"
#include "taukit/fm_polynomial.hpp"
#include "taukit/tau_table.hpp"

#include <json.hpp>

namespace taukit {

// One constrained Thue instance: tau(p^{d-1}) = sign * ell, i.e. the form of
// index d - 1 evaluated at (p^11, tau(p)^2) equals sign * ell.
struct ThueInstance {
    unsigned long ell = 0;
    unsigned long d = 0;
    int sign = 1;
};

struct SieveCertificate {
    ThueInstance instance;
    std::vector<std::uint64_t> moduli_tried;
    std::uint64_t excluding_modulus = 0;  // 0 when inconclusive
    std::string status;                   // "excluded" | "inconclusive"
    std::string transcript_hash;
};

// Modular exclusion: a modulus q rules the instance out when no pair
// (x, y) = (r^11, s^2) mod q has F_{d-1}(x, y) = sign * ell mod q. Residue
// classes of p and tau(p) are unconstrained across distinct moduli, so a
// single modulus must do the job; the pool is scanned in order.
SieveCertificate modular_exclusion(const ThueInstance& inst,
                                   const std::vector<std::uint64_t>& moduli);

// All primes p <= p_max with tau(p^{d-1}) = sign * ell, by the exact
// recurrence. Expected empty for the listed instances.
std::vector<std::uint64_t> bounded_search(const ThueInstance& inst, std::uint64_t p_max,
                                          const TauTable& table);

// The sixteen instance pairs that reach the Thue stage.
const std::vector<ThueInstance>& ld_instances();

struct LDEntry {
    SieveCertificate certificate;
    std::vector<std::uint64_t> search_hits;
    std::uint64_t search_bound = 0;
    std::string strength;  // "certificate" | "evidence-only"
};

struct LDReport {
    std::vector<LDEntry> entries;
    bool any_evidence_only = false;
    bool any_solution_found = false;
};

std::vector<std::uint64_t> default_thue_pool();

LDReport verify_LD_lists(const TauTable& table, std::uint64_t p_max = 10'000,
                         const std::vector<std::uint64_t>& moduli = {});

nlohmann::json to_json(const SieveCertificate& c);
nlohmann::json to_json(const LDReport& r);

}  // namespace taukit
