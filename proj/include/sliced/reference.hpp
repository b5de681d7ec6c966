#pragma once

#include <vector>

#include "sliced/bitstring.hpp"

namespace sliced::reference {

/// Enumeration-based counterpart of count_prefix_hamming: walks every length-lp
/// extension of the prefix and counts radius-2K ball hits directly.
Int count_prefix_hamming_enum(const BitString& a, const std::vector<BitString>& A, unsigned lp, unsigned K);

/// Enumeration-based counterpart of dp_prefix_count: sums the pair-deletion
/// oracle over every length-lp extension of the prefix.
Int count_prefix_deletion_enum(const BitString& a, const BitString& c, unsigned K);

/// log2 of binomial(n, m) as a sum of factor logarithms; an independent numeric
/// route for redundancy cross-checks (no exact big-integer log involved).
double log2_binomial_sum(const Int& n, unsigned m);

}  // namespace sliced::reference
