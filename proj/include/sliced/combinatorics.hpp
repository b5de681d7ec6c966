#pragma once

#include <vector>

#include "sliced/bigint.hpp"

namespace sliced {

/// Exact n-choose-m; 0 when m > n. n may be arbitrarily large.
Int binomial(const Int& n, unsigned long m);

/// Colexicographic unranking of m-subsets of [n], 1-based rank.
/// Rank 1 is {1, ..., m}; rank binomial(n, m) is {n-m+1, ..., n}.
/// Returns the set in ascending order.
std::vector<Int> combination_unrank(const Int& d, const Int& n, unsigned long m);

/// Inverse of combination_unrank. The set must hold m distinct values in [1, n].
Int combination_rank(const std::vector<Int>& set, const Int& n, unsigned long m);

/// Strictly descending integers q_1 > ... > q_M with q_1 = 2^lp, consecutive
/// gaps at least G, and q_M >= G. Produced by gap_unrank, consumed by the
/// greedy codebook generators.
struct GapSequence {
    std::vector<Int> q;  // q[0] = 2^lp, descending
    unsigned lp = 0;
    Int gap = 1;
};

/// binomial(2^lp - M*G + M - 1, M - 1); the valid rank range of gap_unrank.
Int gap_domain_size(unsigned lp, unsigned M, const Int& G);

GapSequence gap_unrank(const Int& d, unsigned lp, unsigned M, const Int& G);
Int gap_rank(const GapSequence& q, unsigned lp, unsigned M, const Int& G);

}  // namespace sliced
