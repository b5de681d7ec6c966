#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

namespace sliced {

/// Arbitrary-precision integer. Domain sizes and ranks routinely exceed 64 bits.
using Int = mpz_class;

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/// log2 of a positive integer, exact exponent plus a double mantissa.
/// Absolute error is far below 1e-9 bits, enough for redundancy reports.
inline double log2_int(const Int& x) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return static_cast<double>(exp2) + std::log2(mant);
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Number of bits in the binary representation (0 for x == 0).
inline std::size_t bit_length(const Int& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace sliced
