#include "taukit/bigint.hpp"

#include <stdexcept>

#include "taukit/arith.hpp"

namespace taukit {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer pow_ui(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::optional<std::pair<Integer, unsigned long>> prime_power_decompose(const Integer& v) {
    if (v < 2) throw std::invalid_argument("prime_power_decompose: v must be >= 2");
    unsigned long maxexp = mpz_sizeinbase(v.get_mpz_t(), 2);
    for (unsigned long e = maxexp; e >= 2; --e) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), e) != 0 && is_prime(root))
            return std::make_pair(root, e);
    }
    if (is_prime(v)) return std::make_pair(v, 1ul);
    return std::nullopt;
}

std::uint64_t mod_u64(const Integer& v, std::uint64_t m) {
    Integer r = v % static_cast<unsigned long>(m);
    if (r < 0) r += static_cast<unsigned long>(m);
    return r.get_ui();
}

long mod_l(const Integer& v, long m) {
    Integer r = v % m;
    if (r < 0) r += m;
    return r.get_si();
}

}  // namespace taukit
