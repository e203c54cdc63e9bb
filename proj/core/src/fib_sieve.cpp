#include "taukit/fib_sieve.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "taukit/arith.hpp"

namespace taukit {

FibSieveResult fib_lucas_mod(long a, long b, std::uint64_t q) {
    if (q == 2 || q == 5 || !is_prime_u64(q))
        throw std::invalid_argument("fib_lucas_mod: q must be an odd prime other than 5");
    FibSieveResult res;
    res.a = a;
    res.b = b;
    res.q = q;

    auto red = [q](long v) {
        long r = v % static_cast<long>(q);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(q) : r);
    };
    std::uint64_t ar = red(a), br = red(b);

    // joint period of (F, L) mod q = least n > 0 with (F_n, F_{n+1}) = (0, 1)
    std::vector<std::uint64_t> fib;
    std::uint64_t f0 = 0, f1 = 1;
    fib.push_back(f0);
    unsigned long period = 0;
    for (unsigned long n = 1;; ++n) {
        std::uint64_t f2 = (f0 + f1) % q;
        f0 = f1;
        f1 = f2;
        if (f0 == 0 && f1 == 1) { period = n; break; }
        fib.push_back(f0);
        if (n > 8 * q) throw std::logic_error("fib_lucas_mod: period scan overran");
    }

    bool eleventh_proper = (q - 1) % 11 == 0;
    std::uint64_t e = eleventh_proper ? (q - 1) / 11 : 1;

    for (unsigned long n = 0; n < period; ++n) {
        std::uint64_t fn = fib[n];
        std::uint64_t fn1 = fib[(n + 1) % period];
        std::uint64_t fnm1 = fib[(n + period - 1) % period];
        std::uint64_t ln = (fnm1 + fn1) % q;  // L_n = F_{n-1} + F_{n+1}
        std::uint64_t x = (mulmod(ar, fn, q) + mulmod(br, ln, q)) % q;
        bool residue = x == 0 || !eleventh_proper || powmod(x, e, q) == 1;
        if (residue) res.classes.insert(n);
    }
    res.period = period;
    return res;
}

bool crt_incompatible(const FibSieveResult& r1, const FibSieveResult& r2) {
    unsigned long l = std::lcm(r1.period, r2.period);
    for (unsigned long n = 0; n < l; ++n)
        if (r1.classes.count(n % r1.period) && r2.classes.count(n % r2.period)) return false;
    return true;
}

bool find_ideal_generator(const Integer& a, long& u, long& v) {
    Integer ell = abs(a);
    if (!ell.fits_slong_p()) return false;
    long l = ell.get_si();
    auto is_square = [](long w, long& root) {
        if (w < 0) return false;
        long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(w))));
        for (long c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
            if (c * c == w) { root = c; return true; }
        return false;
    };
    for (long vv = 0; vv <= l; ++vv) {  // fundamental solutions are far smaller
        long root;
        if (is_square(l + 5 * vv * vv, root)) { u = root; v = vv; return true; }
        if (is_square(5 * vv * vv - l, root)) { u = root; v = vv; return true; }
    }
    return false;
}

std::vector<std::uint64_t> default_dj_pool() {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t q : primes_up_to(2000))
        if (q % 11 == 1) pool.push_back(q);
    return pool;
}

DjCertificate dj_exclude(const Integer& a, long u, long v,
                         const std::vector<std::uint64_t>& prime_pool) {
    DjCertificate cert;
    cert.target = a;
    cert.u = u;
    cert.v = v;
    Integer norm = Integer(u) * u - 5 * Integer(v) * v;
    if (abs(norm) != abs(a))
        throw std::invalid_argument("dj_exclude: u^2 - 5 v^2 does not generate the target ideal");

    const std::vector<std::uint64_t>& pool = prime_pool.empty() ? default_dj_pool() : prime_pool;
    std::vector<FibSieveResult> results;
    for (std::uint64_t q : pool) {
        if (q == 2 || q == 5) continue;
        FibSieveResult r = fib_lucas_mod(u, v, q);
        if (r.classes.empty()) {
            cert.used = {r};
            cert.excluded = true;
            return cert;
        }
        results.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (std::size_t j = i + 1; j < results.size(); ++j) {
            if (crt_incompatible(results[i], results[j])) {
                cert.used = {results[i], results[j]};
                cert.excluded = true;
                return cert;
            }
        }
    }
    cert.inconclusive = true;
    cert.used = std::move(results);
    return cert;
}

nlohmann::json to_json(const DjCertificate& c) {
    nlohmann::json j;
    j["target"] = c.target.get_str();
    j["generator"] = {c.u, c.v};
    j["verdict"] = c.excluded ? "excluded" : "inconclusive";
    j["moduli"] = nlohmann::json::array();
    for (const auto& r : c.used) {
        nlohmann::json m;
        m["q"] = r.q;
        m["period"] = r.period;
        m["classes"] = r.classes;
        j["moduli"].push_back(m);
    }
    return j;
}

}  // namespace taukit
