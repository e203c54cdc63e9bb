#include "taukit/tau_table.hpp"

#include <cstring>
#include <fstream>

namespace taukit {

namespace {

using i128 = __int128;

// Coefficients of the cubed Euler product: +-(2j+1) at triangular indices.
struct SparseCube {
    std::vector<std::uint64_t> idx;
    std::vector<std::int64_t> val;
};

SparseCube euler_cube(std::uint64_t len) {
    SparseCube s;
    for (std::uint64_t j = 0;; ++j) {
        std::uint64_t t = j * (j + 1) / 2;
        if (t >= len) break;
        s.idx.push_back(t);
        s.val.push_back((j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(2 * j + 1));
    }
    return s;
}

std::vector<std::int64_t> square_sparse(const SparseCube& s, std::uint64_t len) {
    std::vector<std::int64_t> r(len, 0);
    for (std::size_t i = 0; i < s.idx.size(); ++i) {
        for (std::size_t j = i; j < s.idx.size(); ++j) {
            std::uint64_t k = s.idx[i] + s.idx[j];
            if (k >= len) break;
            std::int64_t prod = s.val[i] * s.val[j];
            r[k] += (i == j) ? prod : 2 * prod;
        }
    }
    return r;
}

template <typename In>
std::vector<i128> square_dense_i128(const std::vector<In>& a) {
    std::uint64_t len = a.size();
    std::vector<i128> r(len, 0);
    for (std::uint64_t i = 0; i < len; ++i) {
        if (a[i] == 0) continue;
        i128 ai = static_cast<i128>(a[i]);
        std::uint64_t jmax = len - 1 - i;
        if (i <= jmax) r[2 * i] += ai * ai;
        for (std::uint64_t j = i + 1; j <= jmax; ++j) {
            if (a[j] == 0) continue;
            r[i + j] += 2 * ai * static_cast<i128>(a[j]);
        }
    }
    return r;
}

Integer integer_from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<unsigned long>(u >> 64);
    Integer r = (hi << 64) + static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull);
    return neg ? Integer(-r) : r;
}

std::vector<Integer> square_dense_mpz(const std::vector<i128>& a) {
    std::uint64_t len = a.size();
    std::vector<Integer> av(len);
    for (std::uint64_t i = 0; i < len; ++i) av[i] = integer_from_i128(a[i]);
    std::vector<Integer> r(len, 0);
    for (std::uint64_t i = 0; i < len; ++i) {
        if (av[i] == 0) continue;
        std::uint64_t jmax = len - 1 - i;
        if (i <= jmax) r[2 * i] += av[i] * av[i];
        for (std::uint64_t j = i + 1; j <= jmax; ++j) {
            if (av[j] == 0) continue;
            r[i + j] += 2 * av[i] * av[j];
        }
    }
    return r;
}

// Above this limit the final squaring might not fit in 128 bits.
constexpr std::uint64_t kI128SafeLimit = 200'000;

}  // namespace

TauTable TauTable::expand(std::uint64_t limit, std::uint64_t cap) {
    if (limit < 1) throw std::invalid_argument("TauTable::expand: limit must be >= 1");
    if (limit > cap) throw std::runtime_error("TauTable::expand: limit exceeds configured cap");

    std::uint64_t len = limit;  // coefficient indices 0..len-1 of the shifted series
    SparseCube e3 = euler_cube(len);
    std::vector<std::int64_t> e6 = square_sparse(e3, len);
    std::vector<i128> e12 = square_dense_i128(e6);

    std::vector<Integer> coeffs(len);
    if (limit <= kI128SafeLimit) {
        std::vector<i128> e24 = square_dense_i128(e12);
        for (std::uint64_t i = 0; i < len; ++i) coeffs[i] = integer_from_i128(e24[i]);
    } else {
        coeffs = square_dense_mpz(e12);
    }
    return TauTable(limit, std::move(coeffs));
}

Integer TauTable::tau_of(std::uint64_t n) const {
    if (n < 1) throw std::invalid_argument("TauTable::tau_of: n must be >= 1");
    Integer result = 1;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p) continue;
        unsigned long e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (p > limit_) throw std::out_of_range("TauTable::tau_of: prime exceeds table range");
        result *= tau_prime_power(at(p), Integer(static_cast<unsigned long>(p)), e);
    }
    if (rest > 1) {
        if (rest > limit_) throw std::out_of_range("TauTable::tau_of: prime exceeds table range");
        result *= at(rest);
    }
    if (n <= limit_ && result != at(n))
        throw std::logic_error("TauTable::tau_of: multiplicative assembly disagrees with table");
    return result;
}

bool TauTable::is_ordinary(std::uint64_t p) const {
    const Integer& t = at(p);
    return !mpz_divisible_ui_p(t.get_mpz_t(), p);
}

void TauTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("TauTable::save: cannot open " + path.string());
    out.write("TAUT", 4);
    char version = 1;
    out.write(&version, 1);
    std::uint64_t n = limit_;
    char lenbuf[8];
    for (int i = 0; i < 8; ++i) lenbuf[i] = static_cast<char>((n >> (8 * i)) & 0xFF);
    out.write(lenbuf, 8);
    std::vector<unsigned char> buf;
    for (const Integer& c : coeffs_) {
        int s = sgn(c);
        char sign = s > 0 ? 1 : (s < 0 ? 2 : 0);
        out.write(&sign, 1);
        std::size_t bytes = 0;
        buf.resize((mpz_sizeinbase(c.get_mpz_t(), 2) + 7) / 8 + 1);
        if (s != 0) mpz_export(buf.data(), &bytes, -1, 1, -1, 0, c.get_mpz_t());
        if (bytes > 0xFFFF) throw std::runtime_error("TauTable::save: magnitude too large for record");
        char lb[2] = {static_cast<char>(bytes & 0xFF), static_cast<char>((bytes >> 8) & 0xFF)};
        out.write(lb, 2);
        out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(bytes));
    }
    if (!out) throw std::runtime_error("TauTable::save: write failed");
}

TauTable TauTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("TauTable::load: cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "TAUT", 4) != 0)
        throw std::runtime_error("TauTable::load: bad magic");
    char version;
    in.read(&version, 1);
    if (version != 1) throw std::runtime_error("TauTable::load: unsupported version");
    unsigned char lenbuf[8];
    in.read(reinterpret_cast<char*>(lenbuf), 8);
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) n |= static_cast<std::uint64_t>(lenbuf[i]) << (8 * i);
    std::vector<Integer> coeffs(n);
    std::vector<unsigned char> buf;
    for (std::uint64_t i = 0; i < n; ++i) {
        char sign;
        unsigned char lb[2];
        in.read(&sign, 1);
        in.read(reinterpret_cast<char*>(lb), 2);
        std::size_t bytes = lb[0] | (static_cast<std::size_t>(lb[1]) << 8);
        buf.resize(bytes);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(bytes));
        if (!in) throw std::runtime_error("TauTable::load: truncated file");
        Integer c = 0;
        if (bytes) mpz_import(c.get_mpz_t(), bytes, -1, 1, -1, 0, buf.data());
        if (sign == 2) c = -c;
        coeffs[i] = c;
    }
    return TauTable(n, std::move(coeffs));
}

Integer tau_prime_power(const Integer& tau_p, const Integer& p, unsigned long m) {
    Integer p11 = pow_ui(p, 11);
    Integer prev = 1, cur = tau_p;
    if (m == 0) return prev;
    for (unsigned long i = 1; i < m; ++i) {
        Integer next = tau_p * cur - p11 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace taukit
