#pragma once

#include <optional>

#include "sliced/hamming_index.hpp"
#include "sliced/message.hpp"
#include "sliced/rs.hpp"
#include "sliced/word.hpp"

namespace sliced {

/// Derived sizes of the K-substitution code over words of M length-L strings.
///
/// Layout of a codeword (1-based bit positions):
///   string 1:   [1, lp] index prefix | [lp+1, lp+4K*lp] indicator parity | payload
///   strings 2..M-1: [1, lp] index prefix | payload
///   string M:   [1, lp] index prefix | payload | [L-tail+1, L] tail parity
struct SubstParams {
    unsigned M = 0;
    unsigned K = 0;
    std::size_t L = 0;
    unsigned lp = 0;                    // index prefix length: ceil(3 log2 M) + 4K^2 + 2
    Int Q;                              // radius-2K Hamming ball size
    Int d1_domain;
    std::size_t indicator_parity_bits = 0;  // 4K * lp
    std::size_t tail_parity_bits = 0;       // 2K * ceil(log2(M*L))
    std::size_t d2_bits = 0;
    std::optional<RsProfile> rs_indicator;  // 2^lp bits, radius 2K
    std::optional<RsProfile> rs_tail;       // M*L - tail_parity_bits bits, radius K
    std::size_t d1_packed_bits = 0;         // floor(log2(d1_domain)); CLI packing width

    std::size_t message_bits() const { return d1_packed_bits + d2_bits; }
};

/// Validates the sizing inequalities and derives every container length.
/// K = 0 is the degenerate error-free baseline (no parity regions).
SubstParams subst_params(unsigned M, std::size_t L, unsigned K);

Word subst_encode(const Message& msg, const SubstParams& p);

/// Recovers the message from a word hit by at most K substitutions.
/// Throws DecodeError instead of ever returning silently wrong output.
Message subst_decode(const Word& received, const SubstParams& p);

RedundancyReport subst_redundancy_report(const SubstParams& p);

/// Exact-integer check of the index-length inequalities
///   M^2 * (3 log2 M + 4K^2 + 2)^(2K) <= 2^(3 log2 M + 4K^2 + 1)   and
///   M * Q * (M+1) <= 2^lp
/// for one (M, K) with M a power of two; lp_override forces a prefix length
/// (used to exercise the checker on deliberately broken inputs).
struct AppendixCheckResult {
    bool power_bound_holds = false;
    bool ball_bound_holds = false;
};
AppendixCheckResult appendix_bound_check_single(unsigned long M_log2, unsigned K,
                                                std::optional<unsigned> lp_override = std::nullopt);

/// Sweeps M in {2^1, ..., 2^max_m_log2}, K in [1, max_k]; true iff every
/// inequality holds at every point.
bool appendix_bound_check(unsigned max_m_log2, unsigned max_k);

}  // namespace sliced
