#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace dcl {

// Exact integer used for every label and modulus. Labels under power-map
// evolution grow doubly exponentially, so nothing in the library assumes a
// machine word suffices.
using Int = mpz_class;

inline Int gcd(const Int &a, const Int &b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int &a, const Int &b) {
    Int m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

inline Int pow_ui(const Int &base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// a^e mod m, e >= 0, m >= 1.
inline Int powm(const Int &a, const Int &e, const Int &m) {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::size_t bit_length(const Int &x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

inline bool fits_u64(const Int &x) {
    return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int &x) {
    // mpz_get_ui truncates to unsigned long (64-bit here).
    return mpz_get_ui(x.get_mpz_t());
}

inline Int from_u64(std::uint64_t v) {
    Int x;
    mpz_import(x.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return x;
}

inline std::string to_string(const Int &x) { return x.get_str(10); }

inline std::optional<Int> parse_int(const std::string &s) {
    if (s.empty()) return std::nullopt;
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
    return Int(s, 10);
}

} // namespace dcl
