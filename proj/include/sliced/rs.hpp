#pragma once

#include <cstddef>

#include "sliced/bitstring.hpp"

namespace sliced {

/// Sizing of one systematic Reed-Solomon redundancy computation over GF(2^w).
/// The input is split into w-bit symbols (MSB-first, zero-padded tail), 2k
/// parity symbols are appended, and the parity bits are zero-padded up to
/// budget_bits so container lengths stay exact.
struct RsProfile {
    std::size_t n_bits = 0;      // message length in bits
    unsigned k = 0;              // corrects up to k symbol errors
    unsigned w = 0;              // symbol width; field is GF(2^w)
    std::size_t n_symbols = 0;   // ceil(n_bits / w)
    std::size_t budget_bits = 0; // parity container length, >= 2*k*w

    std::size_t parity_bits() const { return 2ull * k * w; }
    std::size_t parity_symbols() const { return 2ull * k; }
    std::size_t codeword_symbols() const { return n_symbols + parity_symbols(); }
};

/// Smallest field satisfying w * (2^w + 1) >= n_bits, widened if needed so the
/// codeword fits (n_symbols + 2k <= 2^w - 1). Throws if budget_bits < 2k*w.
RsProfile rs_profile(std::size_t n_bits, unsigned k, std::size_t budget_bits);

/// Parity of a systematic RS code with minimum distance 2k+1 over the padded
/// symbols of msg; returned as budget_bits bits (parity first, zero padding after).
BitString rs_redundancy(const BitString& msg, const RsProfile& p);

/// received = msg_bits followed by budget_bits parity bits. Corrects up to k
/// symbol errors and returns the message part; throws DecodeError otherwise.
BitString rs_correct(const BitString& received, const RsProfile& p);

}  // namespace sliced
