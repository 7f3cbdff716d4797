#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir {

// All scalar arithmetic in this project is exact. Rat is a canonicalized
// arbitrary-precision rational (GMP keeps gcd(p,q)=1, q>0 after canonicalize).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Serialized form is always "p/q", q >= 1, gcd(p,q)=1 ("-3/2", "5/1").
inline std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned k) {
    Rat out(1);
    Rat b = base;
    while (k) {
        if (k & 1) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

inline Int int_pow(const Int& base, unsigned k) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
    return out;
}

// binomial(n,k) as exact integer; 0 when k > n.
inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace casimir
