#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "taukit/bigint.hpp"

namespace taukit {

// Coefficients tau(1..N) of the weight-12 level-1 cusp form, exact.
//
// Expansion works with the cube of the Euler product, which is lacunary
// (coefficients +-(2n+1) at triangular indices), and squares it three times
// with truncation. Immutable after construction.
class TauTable {
public:
    static constexpr std::uint64_t kDefaultCap = 1'000'000;

    static TauTable expand(std::uint64_t limit, std::uint64_t cap = kDefaultCap);

    std::uint64_t limit() const { return limit_; }

    // tau(n), 1 <= n <= limit.
    const Integer& at(std::uint64_t n) const {
        if (n < 1 || n > limit_) throw std::out_of_range("TauTable::at: n out of range");
        return coeffs_[n - 1];
    }

    // tau(n) assembled multiplicatively from prime-power values. Works for
    // n > limit as long as every prime factor of n is <= limit.
    Integer tau_of(std::uint64_t n) const;

    // True iff p does not divide tau(p). p must be prime and <= limit.
    bool is_ordinary(std::uint64_t p) const;

    void save(const std::filesystem::path& path) const;
    static TauTable load(const std::filesystem::path& path);

private:
    TauTable(std::uint64_t limit, std::vector<Integer> coeffs)
        : limit_(limit), coeffs_(std::move(coeffs)) {}

    std::uint64_t limit_ = 0;
    std::vector<Integer> coeffs_;
};

// tau(p^m) from the Hecke recurrence with seeds tau(p^0) = 1, tau(p^1) = tau_p.
Integer tau_prime_power(const Integer& tau_p, const Integer& p, unsigned long m);

}  // namespace taukit
