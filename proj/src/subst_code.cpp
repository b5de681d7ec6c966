#include "sliced/subst_code.hpp"

#include <algorithm>

#include "sliced/errors.hpp"
#include "sliced/sizing.hpp"

namespace sliced {

SubstParams subst_params(unsigned M, std::size_t L, unsigned K) {
    if (M < 2) throw ParamError("subst_params: M >= 2 required");
    SubstParams p;
    p.M = M;
    p.K = K;
    p.L = L;
    p.lp = pipeline_prefix_length(M, K);
    if (p.lp > kMaxPrefixLength)
        throw ParamError("subst_params: index prefix of " + std::to_string(p.lp) +
                         " bits needs an indicator vector beyond the supported 2^" +
                         std::to_string(kMaxPrefixLength) + " bits");
    p.Q = hamming_ball_size(p.lp, K);
    if (Int(M) * p.Q * (M + 1) > pow2(p.lp))
        throw ParamError("subst_params: violated M*Q*(M+1) <= 2^L' (" + Int(Int(M) * p.Q * (M + 1)).get_str() +
                         " > 2^" + std::to_string(p.lp) + ")");
    p.indicator_parity_bits = 4ull * K * p.lp;
    p.tail_parity_bits = 2ull * K * ceil_log2_size(std::size_t(M) * L);
    if (K >= 1) {
        const std::size_t need = p.lp + p.indicator_parity_bits + 2ull * K * ceil_log2_size(p.indicator_parity_bits);
        if (need > L)
            throw ParamError("subst_params: violated L' + 4KL' + 2K log2(4KL') <= L (" + std::to_string(need) +
                             " > " + std::to_string(L) + ")");
    } else if (p.lp > L) {
        throw ParamError("subst_params: violated L' <= L");
    }
    if (p.lp + p.tail_parity_bits > L)
        throw ParamError("subst_params: violated L' + 2K*log2(ML) <= L");
    const Int d2 = Int(M) * (Int(static_cast<unsigned long>(L)) - p.lp) - p.indicator_parity_bits -
                   p.tail_parity_bits;
    if (d2 < 0)
        throw ParamError("subst_params: violated M(L-L') - 4KL' - 2K*log2(ML) >= 0 (payload " + d2.get_str() +
                         " bits)");
    p.d2_bits = static_cast<std::size_t>(d2.get_ui());
    p.d1_domain = gap_domain_size(p.lp, M, p.Q);
    p.d1_packed_bits = bit_length(p.d1_domain) - 1;
    if (K >= 1) {
        p.rs_indicator = rs_profile(std::size_t(1) << p.lp, 2 * K, p.indicator_parity_bits);
        p.rs_tail = rs_profile(std::size_t(M) * L - p.tail_parity_bits, K, p.tail_parity_bits);
    }
    return p;
}

namespace {

struct Layout {
    std::size_t lp, L, M, ipb, tpb;

    // d2 region of string i as [begin, end) within the string.
    std::pair<std::size_t, std::size_t> d2_region(std::size_t i) const {
        if (i == 0) return {lp + ipb, L};
        if (i + 1 == M) return {lp, L - tpb};
        return {lp, L};
    }
};

Layout layout_of(const SubstParams& p) {
    return {p.lp, p.L, p.M, p.indicator_parity_bits, p.tail_parity_bits};
}

}  // namespace

Word subst_encode(const Message& msg, const SubstParams& p) {
    if (msg.d1 < 1 || msg.d1 > p.d1_domain) throw ParamError("subst_encode: d1 outside its domain");
    if (msg.d2.size() != p.d2_bits) throw ParamError("subst_encode: d2 length differs from parameters");
    const HammingCodebook book = hamming_index_encode(msg.d1, p.lp, p.M, p.K);
    const Layout lay = layout_of(p);

    std::vector<BitString> xs(p.M, BitString(p.L));
    for (unsigned i = 0; i < p.M; ++i)
        for (unsigned b = 0; b < p.lp; ++b)
            if (book.entries[i].bit(b)) xs[i].set_bit(b, true);

    if (p.K >= 1) {
        const BitString parity = rs_redundancy(indicator_vector(book.entries, p.lp), *p.rs_indicator);
        for (std::size_t b = 0; b < p.indicator_parity_bits; ++b)
            if (parity.bit(b)) xs[0].set_bit(p.lp + b, true);
    }

    std::size_t cursor = 0;
    for (unsigned i = 0; i < p.M; ++i) {
        const auto [begin, end] = lay.d2_region(i);
        for (std::size_t b = begin; b < end; ++b)
            if (msg.d2.bit(cursor++)) xs[i].set_bit(b, true);
    }
    if (cursor != p.d2_bits) throw Error("subst_encode: payload layout mismatch");

    if (p.K >= 1) {
        BitString m;
        for (unsigned i = 0; i < p.M; ++i) {
            const std::size_t upto = (i + 1 == p.M) ? p.L - p.tail_parity_bits : p.L;
            for (std::size_t b = 0; b < upto; ++b) m.append_bit(xs[i].bit(b));
        }
        const BitString parity = rs_redundancy(m, *p.rs_tail);
        for (std::size_t b = 0; b < p.tail_parity_bits; ++b)
            if (parity.bit(b)) xs[p.M - 1].set_bit(p.L - p.tail_parity_bits + b, true);
    }

    Word w(xs);
    if (w.size() != p.M) throw Error("subst_encode: strings collapsed");
    for (unsigned i = 0; i < p.M; ++i)
        if (w.at(i) != xs[i]) throw Error("subst_encode: canonical order mismatch");
    return w;
}

namespace {

Message decode_via_codebook(const Word& received, const SubstParams& p, const HammingCodebook& book,
                            const Int& d1) {
    // One codebook entry per received string, unique within prefix distance K.
    std::vector<unsigned> match(p.M, p.M);  // book position -> received index
    std::vector<bool> taken(p.M, false);
    for (unsigned r = 0; r < p.M; ++r) {
        const BitString prefix = received.at(r).prefix(p.lp);
        unsigned hit = p.M;
        for (unsigned i = 0; i < p.M; ++i) {
            if (hamming_distance(prefix, book.entries[i]) <= p.K) {
                if (hit != p.M) throw DecodeError("subst_decode: prefix matches several codebook entries");
                hit = i;
            }
        }
        if (hit == p.M) throw DecodeError("subst_decode: received prefix matches no codebook entry");
        if (taken[hit]) throw DecodeError("subst_decode: two received strings match one codebook entry");
        taken[hit] = true;
        match[hit] = r;
    }

    // The reassembled stream is message part followed by the tail parity, which
    // is exactly the rs_tail received layout.
    BitString m;
    for (unsigned i = 0; i < p.M; ++i) m.append(received.at(match[i]));
    if (p.K >= 1) m = rs_correct(m, *p.rs_tail);

    const Layout lay = layout_of(p);
    BitString d2;
    for (unsigned i = 0; i < p.M; ++i) {
        const auto [begin, end] = lay.d2_region(i);
        for (std::size_t b = begin; b < end; ++b) d2.append_bit(m.bit(std::size_t(i) * p.L + b));
    }

    const Message out{d1, d2};
    const Word reencoded = subst_encode(out, p);
    std::size_t flips = 0;
    for (unsigned i = 0; i < p.M; ++i) flips += hamming_distance(reencoded.at(i), received.at(match[i]));
    if (flips > p.K) throw DecodeError("subst_decode: corrected word is outside the radius-K ball");
    return out;
}

}  // namespace

Message subst_decode(const Word& received, const SubstParams& p) {
    if (received.size() != p.M)
        throw DecodeError("subst_decode: expected " + std::to_string(p.M) + " distinct strings, got " +
                          std::to_string(received.size()));
    for (const auto& s : received)
        if (s.size() != p.L) throw DecodeError("subst_decode: string length differs from L");

    try {
        if (p.K == 0) {
            std::vector<BitString> prefixes;
            for (const auto& s : received) prefixes.push_back(s.prefix(p.lp));
            std::sort(prefixes.begin(), prefixes.end(), std::greater<>());
            HammingCodebook book{prefixes, p.lp, p.M, p.K};
            const Int d1 = hamming_index_decode(book);
            return decode_via_codebook(received, p, book, d1);
        }

        // The all-ones prefix survives as the unique near-all-ones string.
        unsigned i0 = p.M;
        for (unsigned i = 0; i < p.M; ++i) {
            if (received.at(i).prefix(p.lp).weight() + p.K >= p.lp) {
                if (i0 != p.M) throw DecodeError("subst_decode: several near-all-ones prefixes");
                i0 = i;
            }
        }
        if (i0 == p.M) throw DecodeError("subst_decode: no near-all-ones prefix found");

        std::vector<BitString> prefixes;
        for (const auto& s : received) prefixes.push_back(s.prefix(p.lp));
        BitString s1 = indicator_vector(std::vector<BitString>(prefixes.begin(), prefixes.end()), p.lp);
        s1.append(received.at(i0).slice(p.lp, p.indicator_parity_bits));
        const BitString indicator = rs_correct(s1, *p.rs_indicator);

        std::vector<BitString> support = indicator_support(indicator, p.lp);
        if (support.size() != p.M)
            throw DecodeError("subst_decode: corrected indicator weight differs from M");
        std::sort(support.begin(), support.end(), std::greater<>());
        HammingCodebook book{support, p.lp, p.M, p.K};
        const Int d1 = hamming_index_decode(book);
        return decode_via_codebook(received, p, book, d1);
    } catch (const ParamError& e) {
        throw DecodeError(std::string("subst_decode: ") + e.what());
    }
}

RedundancyReport subst_redundancy_report(const SubstParams& p) {
    RedundancyReport r;
    r.log2_word_space = log2_int(binomial(pow2(p.L), p.M));
    r.log2_d1_domain = log2_int(p.d1_domain);
    r.d2_bits = p.d2_bits;
    r.r_achieved = r.log2_word_space - r.log2_d1_domain - static_cast<double>(p.d2_bits);
    r.bound_error_term = 2.0 * p.K * std::log2(static_cast<double>(p.M) * static_cast<double>(p.L));
    r.bound_index_term = (12.0 * p.K + 2.0) * std::log2(static_cast<double>(p.M));
    return r;
}

AppendixCheckResult appendix_bound_check_single(unsigned long M_log2, unsigned K,
                                                std::optional<unsigned> lp_override) {
    const Int M = pow2(M_log2);
    const unsigned lp = lp_override.value_or(static_cast<unsigned>(3 * M_log2 + 4ull * K * K + 2));
    AppendixCheckResult res;
    Int lhs = M * M;
    for (unsigned i = 0; i < 2 * K; ++i) lhs *= lp;
    res.power_bound_holds = lhs <= pow2(lp - 1);
    const Int Q = hamming_ball_size(lp, K);
    res.ball_bound_holds = M * Q * (M + 1) <= pow2(lp);
    return res;
}

bool appendix_bound_check(unsigned max_m_log2, unsigned max_k) {
    for (unsigned long j = 1; j <= max_m_log2; ++j)
        for (unsigned K = 1; K <= max_k; ++K) {
            const auto r = appendix_bound_check_single(j, K);
            if (!r.power_bound_holds || !r.ball_bound_holds) return false;
        }
    return true;
}

}  // namespace sliced
