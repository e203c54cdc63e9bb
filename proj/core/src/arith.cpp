#include "taukit/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace taukit {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sufficient witness set for n < 3.3 * 10^24, in particular all of uint64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
        }
    }
    return out;
}

std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

int legendre(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    if (r == 0) return 0;
    std::uint64_t e = powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

namespace {
std::uint64_t sigma_k(std::uint64_t n, int k) {
    std::uint64_t result = 1;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        std::uint64_t term = 1, pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        std::uint64_t acc = 1;
        while (n % p == 0) {
            n /= p;
            acc *= pk;
            term += acc;
        }
        result *= term;
    }
    if (n > 1) {
        std::uint64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= n;
        result *= 1 + pk;
    }
    return result;
}
}  // namespace

std::uint64_t sigma1(std::uint64_t n) { return sigma_k(n, 1); }
std::uint64_t sigma3(std::uint64_t n) { return sigma_k(n, 3); }
std::uint64_t sigma0(std::uint64_t n) {
    std::uint64_t result = 1;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        std::uint64_t e = 0;
        while (n % p == 0) { n /= p; ++e; }
        result *= e + 1;
    }
    if (n > 1) result *= 2;
    return result;
}

unsigned perfect_power_u64(std::uint64_t v, std::uint64_t& base) {
    if (v < 2) throw std::invalid_argument("perfect_power_u64: v must be >= 2");
    for (unsigned e = 63; e >= 2; --e) {
        std::uint64_t r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(v), 1.0 / e)));
        for (std::uint64_t c = (r > 2 ? r - 2 : 1); c <= r + 2; ++c) {
            std::uint64_t acc = 1;
            bool overflow = false;
            for (unsigned i = 0; i < e; ++i) {
                if (acc > v / c) { overflow = true; break; }
                acc *= c;
            }
            if (!overflow && acc == v && c >= 2) {
                base = c;
                return e;
            }
        }
    }
    base = v;
    return 1;
}

}  // namespace taukit
