#pragma once

#include <cstddef>

#include "sliced/bigint.hpp"

namespace sliced {

inline unsigned ceil_log2_size(std::size_t x) {
    unsigned t = 0;
    while ((std::size_t(1) << t) < x) ++t;
    return t;
}

/// Index prefix length of both pipelines: ceil(3 log2 M) + 4K^2 + 2.
/// The ceiling keeps every sizing inequality intact when M is not a power of two.
inline unsigned pipeline_prefix_length(unsigned M, unsigned K) {
    const Int m3 = Int(M) * M * M;
    unsigned c = 0;
    while (pow2(c) < m3) ++c;
    return c + 4 * K * K + 2;
}

/// Indicator vectors hold 2^lp bits; this caps them at 8 MiB.
inline constexpr unsigned kMaxPrefixLength = 26;

}  // namespace sliced
