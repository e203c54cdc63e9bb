#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taukit/bigint.hpp"
#include "taukit/congruence.hpp"
#include "taukit/fib_sieve.hpp"
#include "taukit/tau_table.hpp"
#include "taukit/thue_sieve.hpp"

#include <json.hpp>

namespace taukit {

struct PipelineConfig {
    unsigned long ell_max = 1000;
    std::uint64_t p_max = 5000;
    std::uint64_t n_max = 100'000;        // instance scans are capped at the table limit
    bool restrict_t2 = true;              // skip ell <= 100 for t = 2 (already settled)
    std::uint64_t thue_search_bound = 10'000;
    std::uint64_t square_search_bound = 1'000'000;  // d = 3 square-value search
    std::vector<std::uint64_t> thue_pool; // empty = default
    std::vector<std::uint64_t> dj_pool;   // empty = default
};

struct ReasonStep {
    std::string step;
    std::string module;
    std::string rule;
};

struct ExclusionReport {
    int eps = 1;
    unsigned t = 1;
    unsigned long ell = 0;
    std::string verdict;  // "excluded" | "exceptional" | "evidence-only"
    std::vector<ReasonStep> chain;
    std::vector<std::string> shapes;       // structural classification when exceptional
    std::vector<std::uint64_t> instances;  // realized n within the scanned range
};

struct Theorem1Result {
    std::vector<ExclusionReport> reports;
    // residue_survivors: everything the residue-class sieve alone admits.
    // survivors: the same list after the d = 3 square-value search (the value
    // tau(p^2) = eps*ell forces p^11 + eps*ell to be a perfect square, which a
    // bounded scan rules out; that closure is search evidence, not a proof).
    std::map<int, std::vector<Survivor>> residue_survivors;  // by eps
    std::map<int, std::vector<Survivor>> survivors;          // by eps, narrowed
    std::map<int, std::set<unsigned long>> exceptional;      // by eps
    bool any_evidence_only = false;
};

// Odd primes p <= bound with p^11 + eps*ell a perfect square (the necessary
// shape of a d = 3 solution); a hit whose square root disagrees with |tau(p)|
// within the table is discarded.
std::vector<std::uint64_t> square_value_hits(int eps, unsigned long ell, std::uint64_t bound,
                                             const TauTable& table);

struct Theorem2Result {
    unsigned t = 0;
    std::vector<ExclusionReport> reports;
    std::map<int, std::set<unsigned long>> l_sets;  // by eps
    bool any_evidence_only = false;
};

Theorem1Result run_theorem1(const PipelineConfig& cfg, const TauTable& table);
Theorem2Result run_theorem2(unsigned t, const PipelineConfig& cfg, const TauTable& table);

struct FirstExample {
    int sign = 1;
    unsigned t = 2;
    bool found = false;
    std::uint64_t p = 0;
    Integer ell;
};

// First prime p (ascending) with tau(p) = sign * t * ell, ell an odd prime,
// for each sign and t in {2, 4, 8}.
std::vector<FirstExample> first_examples(std::uint64_t p_max, const TauTable& table);

struct ShapeChain {
    unsigned tau2_prime_count = 0;  // primes p_i with tau(p_i) = 2 in the product
    std::string residual;           // the remaining factor's description
    bool admissible = false;
    std::string text;
};

struct Classification {
    std::vector<ShapeChain> shapes;
    std::vector<std::uint64_t> instances;  // n <= n_max with tau(n) = eps * t * ell
};

Classification classify_n_for_target(int eps, unsigned t, unsigned long ell,
                                     const PipelineConfig& cfg, const TauTable& table);

nlohmann::json to_json(const ExclusionReport& r);
nlohmann::json to_json(const Theorem1Result& r);
nlohmann::json to_json(const Theorem2Result& r);
nlohmann::json to_json(const std::vector<FirstExample>& v);

}  // namespace taukit
