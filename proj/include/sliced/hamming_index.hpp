#pragma once

#include <vector>

#include "sliced/bitstring.hpp"
#include "sliced/combinatorics.hpp"

namespace sliced {

/// Size of a radius-2K Hamming ball in {0,1}^lp: sum_{i<=2K} binomial(lp, i).
/// This is the gap between consecutive codebook ranks.
Int hamming_ball_size(unsigned lp, unsigned K);

/// Number of pairs (c in A, c' in {0,1}^lp) where c' starts with prefix a and
/// d_H(c', c) <= 2K. Closed form: sum over c of sum_{i <= 2K - d_H(a, prefix(c))}
/// binomial(lp - |a|, i).
Int count_prefix_hamming(const BitString& a, const std::vector<BitString>& A, unsigned lp, unsigned K);

/// M distinct length-lp strings: all-ones first, strictly descending, pairwise
/// Hamming distance >= 2K+1.
struct HammingCodebook {
    std::vector<BitString> entries;
    unsigned lp = 0;
    unsigned M = 0;
    unsigned K = 0;
};

/// Greedy bit-by-bit generation from a gap sequence with gap Q.
HammingCodebook greedy_codebook_hamming(const GapSequence& q, unsigned lp, unsigned M, unsigned K);

/// Exact inverse of greedy_codebook_hamming; validates codebook invariants.
GapSequence codebook_rank_hamming(const HammingCodebook& book);

/// Throws ParamError if the codebook violates its invariants.
void validate_codebook(const HammingCodebook& book);

Int hamming_index_domain(unsigned lp, unsigned M, unsigned K);

/// Bijection from [1, hamming_index_domain(...)] onto distance-separated codebooks.
HammingCodebook hamming_index_encode(const Int& d, unsigned lp, unsigned M, unsigned K);
Int hamming_index_decode(const HammingCodebook& book);

}  // namespace sliced
