#pragma once

#include <cstdint>
#include <vector>

#include "taukit/bigint.hpp"

namespace taukit {

// The homogeneous bivariate family generated by 1 / (1 - sqrt(Y) T + X T^2).
// Even indices are honest polynomials in Z[X, Y]; odd indices are stored with
// the sqrt(Y) factor removed. Degree is floor(index / 2) either way.
//
// The tau connection: F_{2m}(p^11, tau(p)^2) = tau(p^{2m}).
struct FmPolynomial {
    unsigned long index = 0;
    bool sqrt_y_factor = false;          // true for odd indices
    std::vector<Integer> coeffs;         // coeffs[i] multiplies X^i Y^(deg - i)

    unsigned long degree() const { return coeffs.empty() ? 0 : static_cast<unsigned long>(coeffs.size()) - 1; }

    // Value of the stored polynomial (sqrt(Y) factor excluded for odd index).
    Integer eval(const Integer& x, const Integer& y) const;
    std::uint64_t eval_mod(std::uint64_t x, std::uint64_t y, std::uint64_t q) const;
};

// F_0 .. F_max_m.
std::vector<FmPolynomial> generate_fm(unsigned long max_m);

}  // namespace taukit
