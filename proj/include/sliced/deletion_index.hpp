#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sliced/bitstring.hpp"
#include "sliced/combinatorics.hpp"

namespace sliced {

/// Per-string interference count for the deletion metric:
/// P = sum_{r=0}^{K} binomial(lp, r)^2 * 2^r. Plays the role the Hamming ball
/// size plays for substitutions; equals the prefix count for an empty prefix.
Int deletion_interference_size(unsigned lp, unsigned K);

/// Brute-force count of pairs (D1, D2), |D1| <= r1, |D2| <= r2, with
/// c1 after deleting D1 equal to c2 after deleting D2. Oracle-scale only:
/// guarded to |c| <= 16 and r <= 3.
Int count_pair_deletions(const BitString& c1, const BitString& c2, unsigned r1, unsigned r2);

/// Base case of the prefix-count dynamic program: number of triples
/// (c', D1, D2) where c' is a free string of f bits, D1 <= r1 deletions in c',
/// D2 <= r2 deletions in a fixed k2-bit string, and the results coincide.
/// Depends only on the sizes, not the bit values.
Int dp_base_count(unsigned f, unsigned k2, unsigned r1, unsigned r2);

/// N_D(a, {c}) via the dynamic program: the number of pairs (c', (D1, D2))
/// where c' is a length-lp string starting with a, and deleting at most K bits
/// from each of c' and c yields a common subsequence.
Int dp_prefix_count(const BitString& a, const BitString& c, unsigned K);

/// Shared memo for dp_prefix_count keyed by (a, c, K); thread-safe.
class PrefixCountCache {
public:
    Int get(const BitString& a, const BitString& c, unsigned K);

private:
    std::mutex mu_;
    std::unordered_map<std::string, Int> map_;
};

/// Sum of dp_prefix_count over a set of strings.
Int count_prefix_deletion(const BitString& a, const std::vector<BitString>& A, unsigned K,
                          PrefixCountCache* cache = nullptr);

/// M distinct length-lp strings: all-ones first, strictly descending, pairwise
/// disjoint radius-K deletion balls.
struct DeletionCodebook {
    std::vector<BitString> entries;
    unsigned lp = 0;
    unsigned M = 0;
    unsigned K = 0;
};

DeletionCodebook greedy_codebook_deletion(const GapSequence& q, unsigned lp, unsigned M, unsigned K,
                                          PrefixCountCache* cache = nullptr);
GapSequence codebook_rank_deletion(const DeletionCodebook& book, PrefixCountCache* cache = nullptr);
void validate_codebook(const DeletionCodebook& book);

Int deletion_index_domain(unsigned lp, unsigned M, unsigned K);
DeletionCodebook deletion_index_encode(const Int& d, unsigned lp, unsigned M, unsigned K,
                                       PrefixCountCache* cache = nullptr);
Int deletion_index_decode(const DeletionCodebook& book, PrefixCountCache* cache = nullptr);

}  // namespace sliced
