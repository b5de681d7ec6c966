#pragma once

#include <cstddef>

#include "sliced/bigint.hpp"
#include "sliced/bitstring.hpp"

namespace sliced {

/// Payload of one codeword: an index integer plus raw bits.
struct Message {
    Int d1;         // in [1, d1_domain] of the active parameter set
    BitString d2;   // exactly d2_bits of the active parameter set

    bool operator==(const Message& o) const { return d1 == o.d1 && d2 == o.d2; }
    bool operator!=(const Message& o) const { return !(*this == o); }
};

/// Exact-arithmetic redundancy accounting: r = log2 C(2^L, M) - log2(d1 domain) - d2 bits,
/// reported against the leading bound terms.
struct RedundancyReport {
    double r_achieved = 0;
    double log2_word_space = 0;   // log2 binomial(2^L, M)
    double log2_d1_domain = 0;
    std::size_t d2_bits = 0;
    double bound_error_term = 0;  // 2K log2(ML) for substitutions, 4K log2(ML) for deletions
    double bound_index_term = 0;  // (12K + 2) log2 M
    double codec_excess_bits = 0; // deletion mode: container overhead beyond the parity bits
};

}  // namespace sliced
