#include "taukit/thue_sieve.hpp"

#include <algorithm>
#include <stdexcept>

#include "taukit/arith.hpp"

namespace taukit {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

// Does some (x, y) = (r^11, s^2) mod q evaluate to target under the form?
bool has_solution_mod(const FmPolynomial& form, std::uint64_t q, std::uint64_t target) {
    std::vector<std::uint64_t> xs, ys;
    {
        std::vector<bool> seen(q, false);
        for (std::uint64_t r = 0; r < q; ++r) {
            std::uint64_t x = powmod(r, 11, q);
            if (!seen[x]) { seen[x] = true; xs.push_back(x); }
        }
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint64_t s = 0; s < q; ++s) {
            std::uint64_t y = mulmod(s, s, q);
            if (!seen[y]) { seen[y] = true; ys.push_back(y); }
        }
    }
    unsigned long deg = form.degree();
    for (std::uint64_t x : xs) {
        // Horner in y with precomputed x powers
        std::vector<std::uint64_t> xp(deg + 1);
        xp[0] = 1 % q;
        for (unsigned long i = 1; i <= deg; ++i) xp[i] = mulmod(xp[i - 1], x, q);
        for (std::uint64_t y : ys) {
            std::uint64_t acc = 0, yp = 1 % q;
            // sum over i of c_i x^i y^{deg-i}; iterate i downward so y powers build up
            for (long i = static_cast<long>(deg); i >= 0; --i) {
                std::uint64_t c = mod_u64(form.coeffs[static_cast<std::size_t>(i)], q);
                acc = (acc + mulmod(c, mulmod(xp[static_cast<std::size_t>(i)], yp, q), q)) % q;
                yp = mulmod(yp, y, q);
            }
            if (acc == target) return true;
        }
    }
    return false;
}

}  // namespace

const std::vector<ThueInstance>& ld_instances() {
    static const std::vector<ThueInstance> inst = {
        {277, 23, 1}, {421, 7, 1},  {631, 79, 1},  {827, 23, 1},
        {827, 59, 1}, {967, 7, 1},  {967, 11, 1},  {967, 23, 1},
        {367, 23, -1}, {443, 17, -1}, {643, 23, -1}, {643, 107, -1},
        {827, 59, -1}, {829, 23, -1}, {829, 83, -1}, {919, 17, -1},
    };
    return inst;
}

std::vector<std::uint64_t> default_thue_pool() {
    // Primes where 11th powers form a small subgroup are the productive
    // moduli; a few generic small primes round the pool out.
    std::vector<std::uint64_t> pool;
    for (std::uint64_t q : primes_up_to(60)) pool.push_back(q);
    for (std::uint64_t q : primes_up_to(2500))
        if (q % 11 == 1 && q > 60) pool.push_back(q);
    return pool;
}

SieveCertificate modular_exclusion(const ThueInstance& inst,
                                   const std::vector<std::uint64_t>& moduli) {
    if (inst.d < 3) throw std::invalid_argument("modular_exclusion: d must be > 2");
    SieveCertificate cert;
    cert.instance = inst;
    FmPolynomial form = generate_fm(inst.d - 1).back();

    std::string transcript = "thue:" + std::to_string(inst.sign * static_cast<long>(inst.ell)) +
                             ":d=" + std::to_string(inst.d);
    for (std::uint64_t q : moduli) {
        cert.moduli_tried.push_back(q);
        std::uint64_t target = inst.sign == 1 ? inst.ell % q : (q - inst.ell % q) % q;
        bool solvable = has_solution_mod(form, q, target);
        transcript += ";" + std::to_string(q) + (solvable ? "=open" : "=closed");
        if (!solvable) {
            cert.excluding_modulus = q;
            cert.status = "excluded";
            cert.transcript_hash = hex(fnv1a(transcript));
            return cert;
        }
    }
    cert.status = "inconclusive";
    cert.transcript_hash = hex(fnv1a(transcript));
    return cert;
}

std::vector<std::uint64_t> bounded_search(const ThueInstance& inst, std::uint64_t p_max,
                                          const TauTable& table) {
    std::vector<std::uint64_t> hits;
    Integer target = inst.sign * Integer(static_cast<unsigned long>(inst.ell));
    for (std::uint64_t p : primes_up_to(std::min(p_max, table.limit()))) {
        Integer v = tau_prime_power(table.at(p), Integer(static_cast<unsigned long>(p)), inst.d - 1);
        if (v == target) hits.push_back(p);
    }
    return hits;
}

LDReport verify_LD_lists(const TauTable& table, std::uint64_t p_max,
                         const std::vector<std::uint64_t>& moduli) {
    const std::vector<std::uint64_t>& pool = moduli.empty() ? default_thue_pool() : moduli;
    LDReport rep;
    for (const ThueInstance& inst : ld_instances()) {
        LDEntry e;
        e.certificate = modular_exclusion(inst, pool);
        e.search_hits = bounded_search(inst, p_max, table);
        e.search_bound = p_max;
        e.strength = e.certificate.status == "excluded" ? "certificate" : "evidence-only";
        rep.any_evidence_only = rep.any_evidence_only || e.strength == "evidence-only";
        rep.any_solution_found = rep.any_solution_found || !e.search_hits.empty();
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

nlohmann::json to_json(const SieveCertificate& c) {
    nlohmann::json j;
    j["ell"] = c.instance.ell;
    j["d"] = c.instance.d;
    j["sign"] = c.instance.sign;
    j["moduli_tried"] = c.moduli_tried;
    j["excluding_modulus"] = c.excluding_modulus;
    j["status"] = c.status;
    j["transcript_hash"] = c.transcript_hash;
    return j;
}

nlohmann::json to_json(const LDReport& r) {
    nlohmann::json j;
    j["any_evidence_only"] = r.any_evidence_only;
    j["any_solution_found"] = r.any_solution_found;
    j["instances"] = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json ej;
        ej["certificate"] = to_json(e.certificate);
        ej["search_bound"] = e.search_bound;
        ej["search_hits"] = e.search_hits;
        ej["strength"] = e.strength;
        j["instances"].push_back(ej);
    }
    return j;
}

}  // namespace taukit
