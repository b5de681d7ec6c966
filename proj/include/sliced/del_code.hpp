#pragma once

#include <memory>
#include <optional>
#include <string>

#include "sliced/deletion_codec.hpp"
#include "sliced/deletion_index.hpp"
#include "sliced/message.hpp"
#include "sliced/rs.hpp"
#include "sliced/word.hpp"

namespace sliced {

/// Derived sizes of the K-deletion code over words of M length-L strings.
///
/// Layout of a codeword (1-based bit positions):
///   string 1:   [1, lp] index prefix | [lp+1, lp+alpha_rs] protected indicator
///               parity | head of the payload codeword
///   strings 2..M: [1, lp] index prefix | payload codeword continuation
///
/// Every container is sized from the actual codec capacity, never from an
/// asymptotic formula.
struct DelParams {
    unsigned M = 0;
    unsigned K = 0;
    std::size_t L = 0;
    unsigned lp = 0;
    Int P;                                  // per-string deletion interference
    Int d1_domain;
    std::string codec_id;
    std::size_t indicator_parity_bits = 0;  // 4K * lp
    std::size_t alpha_rs = 0;               // container of the protected parity block
    std::size_t parity_msg_bits = 0;        // codec capacity(alpha_rs) >= indicator_parity_bits
    std::size_t payload_container = 0;      // M (L - lp) - alpha_rs
    std::size_t d2_bits = 0;                // codec capacity(payload_container)
    std::optional<RsProfile> rs_indicator;
    std::size_t d1_packed_bits = 0;

    std::size_t message_bits() const { return d1_packed_bits + d2_bits; }
};

DelParams del_params(unsigned M, std::size_t L, unsigned K, const std::string& codec_id);

Word del_encode(const Message& msg, const DelParams& p);

/// Recovers the message from a word hit by a combination of at most K
/// deletions and insertions (insertion handling is decoder-side only).
Message del_decode(const Word& received, const DelParams& p);

RedundancyReport del_redundancy_report(const DelParams& p);

/// Shared prefix-count memo; reusing one across calls speeds up repeated
/// encode/decode at the same parameters without changing results.
PrefixCountCache& del_shared_cache();

}  // namespace sliced
