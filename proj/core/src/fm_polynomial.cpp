#include "taukit/fm_polynomial.hpp"

#include <stdexcept>

#include "taukit/arith.hpp"

namespace taukit {

Integer FmPolynomial::eval(const Integer& x, const Integer& y) const {
    // coeffs[i] * x^i * y^(deg - i)
    Integer acc = 0;
    unsigned long deg = degree();
    Integer xp = 1;
    std::vector<Integer> ypow(deg + 1);
    ypow[0] = 1;
    for (unsigned long j = 1; j <= deg; ++j) ypow[j] = ypow[j - 1] * y;
    for (unsigned long i = 0; i <= deg; ++i) {
        acc += coeffs[i] * xp * ypow[deg - i];
        xp *= x;
    }
    return acc;
}

std::uint64_t FmPolynomial::eval_mod(std::uint64_t x, std::uint64_t y, std::uint64_t q) const {
    unsigned long deg = degree();
    std::uint64_t acc = 0, xp = 1;
    std::vector<std::uint64_t> ypow(deg + 1);
    ypow[0] = 1 % q;
    for (unsigned long j = 1; j <= deg; ++j) ypow[j] = mulmod(ypow[j - 1], y % q, q);
    for (unsigned long i = 0; i <= deg; ++i) {
        std::uint64_t c = mod_u64(coeffs[i], q);
        acc = (acc + mulmod(c, mulmod(xp, ypow[deg - i], q), q)) % q;
        xp = mulmod(xp, x % q, q);
    }
    return acc;
}

std::vector<FmPolynomial> generate_fm(unsigned long max_m) {
    // Stored recurrences, with P_m the sqrt(Y)-free part of F_m:
    //   even m: P_m = Y * P_{m-1} - X * P_{m-2}
    //   odd  m: P_m = P_{m-1} - X * P_{m-2}
    std::vector<FmPolynomial> out;
    out.reserve(max_m + 1);
    for (unsigned long m = 0; m <= max_m; ++m) {
        FmPolynomial f;
        f.index = m;
        f.sqrt_y_factor = m % 2 == 1;
        unsigned long deg = m / 2;
        f.coeffs.assign(deg + 1, 0);
        if (m == 0 || m == 1) {
            f.coeffs[0] = 1;
        } else {
            const auto& p1 = out[m - 1].coeffs;  // degree (m-1)/2
            const auto& p2 = out[m - 2].coeffs;  // degree (m-2)/2
            // even m: Y * P_{m-1} keeps X-exponents and raises the Y-degree;
            // odd m: P_{m-1} carries over directly. Same index mapping.
            for (unsigned long i = 0; i < p1.size(); ++i) f.coeffs[i] += p1[i];
            // - X * P_{m-2} shifts X-exponents up by one
            for (unsigned long i = 0; i < p2.size(); ++i) f.coeffs[i + 1] -= p2[i];
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace taukit
