#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "taukit/bigint.hpp"
#include "taukit/tau_table.hpp"

namespace taukit {

// Integer point attached to tau(p^4): (x, y) = (p, 2 tau(p)^2 - 3 p^11) on
// y^2 = 5 x^22 + 4a with a = tau(p^4). Throws std::logic_error if the
// identity fails (which would mean an upstream bug).
struct TauP4Point {
    Integer x;
    Integer y;
    Integer a;  // tau(p^4)
};
TauP4Point taup4_point(std::uint64_t p, const Integer& tau_p);

// Solutions of p^2 - eps*p + 1 = 3^r over primes p <= bound_p (p = 2
// included), 0 <= r <= bound_r.
struct PowerOfThreeSolution {
    int eps;
    std::uint64_t p;
    unsigned r;
};
std::vector<PowerOfThreeSolution> solve_p_squared_eq(std::uint64_t bound_p, unsigned bound_r);

// Solutions of t * ell^j = p^d + eps with ell an odd prime, d odd >= 3, over
// primes p <= bound_p. t is 2 or 8.
struct ShiftedPowerSolution {
    Integer ell;
    unsigned long j;
    std::uint64_t p;
    unsigned long d;
    int eps;
};
std::vector<ShiftedPowerSolution> search_two_ell_power(std::uint64_t bound_p, unsigned long bound_d,
                                                       unsigned long bound_j);
std::vector<ShiftedPowerSolution> search_eight_ell_power(std::uint64_t bound_p, unsigned long bound_d,
                                                         unsigned long bound_j);

// The two defective-case values (3^{2k-1} - 1)/2 and (7^{2k-1} + 1)/8 and
// whether each is ell^{2j} for an odd prime ell (j >= 1) or equals 1 (j = 0).
struct DefectiveCaseBranch {
    Integer value;
    bool is_one = false;                          // the (k, j) = (1, 0) case
    std::optional<std::pair<Integer, unsigned long>> solution;  // (ell, j) with value = ell^{2j}
};
struct DefectiveCaseReport {
    unsigned long k;
    DefectiveCaseBranch three_branch;  // (3^{2k-1} - 1)/2
    DefectiveCaseBranch seven_branch;  // (7^{2k-1} + 1)/8
};
DefectiveCaseReport genEVT_defective_check(unsigned long k);

}  // namespace taukit
