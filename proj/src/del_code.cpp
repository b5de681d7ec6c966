#include "sliced/del_code.hpp"

#include <algorithm>
#include <functional>

#include "sliced/errors.hpp"
#include "sliced/sizing.hpp"

namespace sliced {

PrefixCountCache& del_shared_cache() {
    static PrefixCountCache cache;
    return cache;
}

DelParams del_params(unsigned M, std::size_t L, unsigned K, const std::string& codec_id) {
    if (M < 2) throw ParamError("del_params: M >= 2 required");
    const DeletionCodec& codec = deletion_codec(codec_id);
    if (codec.k() != K)
        throw ParamError("del_params: codec '" + codec_id + "' corrects K=" + std::to_string(codec.k()) +
                         ", not K=" + std::to_string(K));
    DelParams p;
    p.M = M;
    p.K = K;
    p.L = L;
    p.codec_id = codec_id;
    p.lp = pipeline_prefix_length(M, K);
    if (p.lp > kMaxPrefixLength)
        throw ParamError("del_params: index prefix of " + std::to_string(p.lp) +
                         " bits needs an indicator vector beyond the supported 2^" +
                         std::to_string(kMaxPrefixLength) + " bits");
    p.P = deletion_interference_size(p.lp, K);
    if (pow2(p.lp) <= Int(M) * p.P)
        throw ParamError("del_params: violated 2^L' > M*P (2^" + std::to_string(p.lp) + " <= " +
                         Int(Int(M) * p.P).get_str() + ")");
    p.indicator_parity_bits = 4ull * K * p.lp;
    p.alpha_rs = codec.codeword_len(p.indicator_parity_bits);
    p.parity_msg_bits = codec.capacity(p.alpha_rs);
    if (p.lp + p.alpha_rs > L)
        throw ParamError("del_params: violated L' + alpha_RS <= L (" + std::to_string(p.lp + p.alpha_rs) +
                         " > " + std::to_string(L) + ")");
    p.payload_container = std::size_t(M) * (L - p.lp) - p.alpha_rs;
    p.d2_bits = codec.capacity(p.payload_container);
    p.d1_domain = gap_domain_size(p.lp, M, p.P);
    p.d1_packed_bits = bit_length(p.d1_domain) - 1;
    if (K >= 1) p.rs_indicator = rs_profile(std::size_t(1) << p.lp, 2 * K, p.indicator_parity_bits);
    return p;
}

Word del_encode(const Message& msg, const DelParams& p) {
    if (msg.d1 < 1 || msg.d1 > p.d1_domain) throw ParamError("del_encode: d1 outside its domain");
    if (msg.d2.size() != p.d2_bits) throw ParamError("del_encode: d2 length differs from parameters");
    const DeletionCodec& codec = deletion_codec(p.codec_id);
    const DeletionCodebook book = deletion_index_encode(msg.d1, p.lp, p.M, p.K, &del_shared_cache());

    std::vector<BitString> xs(p.M, BitString(p.L));
    for (unsigned i = 0; i < p.M; ++i)
        for (unsigned b = 0; b < p.lp; ++b)
            if (book.entries[i].bit(b)) xs[i].set_bit(b, true);

    if (p.K >= 1) {
        const BitString parity = rs_redundancy(indicator_vector(book.entries, p.lp), *p.rs_indicator);
        BitString parity_msg(p.parity_msg_bits);
        for (std::size_t b = 0; b < p.indicator_parity_bits; ++b)
            if (parity.bit(b)) parity_msg.set_bit(b, true);
        const BitString block = codec.encode(parity_msg, p.alpha_rs);
        for (std::size_t b = 0; b < p.alpha_rs; ++b)
            if (block.bit(b)) xs[0].set_bit(p.lp + b, true);
    }

    const BitString payload = codec.encode(msg.d2, p.payload_container);
    std::size_t cursor = 0;
    for (std::size_t b = p.lp + p.alpha_rs; b < p.L; ++b)
        if (payload.bit(cursor++)) xs[0].set_bit(b, true);
    for (unsigned i = 1; i < p.M; ++i)
        for (std::size_t b = p.lp; b < p.L; ++b)
            if (payload.bit(cursor++)) xs[i].set_bit(b, true);
    if (cursor != p.payload_container) throw Error("del_encode: payload layout mismatch");

    Word w(xs);
    if (w.size() != p.M) throw Error("del_encode: strings collapsed");
    for (unsigned i = 0; i < p.M; ++i)
        if (w.at(i) != xs[i]) throw Error("del_encode: canonical order mismatch");
    return w;
}

namespace {

// Unique received string per codebook entry: the fixed (lp - K)-length window
// of an erroneous copy is a subsequence of its own entry only, because the
// radius-K deletion balls of distinct entries are disjoint.
std::vector<unsigned> match_strings_pure(const Word& received, const DeletionCodebook& book,
                                         const DelParams& p) {
    std::vector<unsigned> received_of_entry(p.M, p.M);
    std::vector<bool> taken(p.M, false);
    for (unsigned r = 0; r < p.M; ++r) {
        const BitString& y = received.at(r);
        unsigned hit = p.M;
        for (unsigned i = 0; i < p.M; ++i) {
            if (!is_subsequence(y.prefix(p.lp - p.K), book.entries[i])) continue;
            if (hit != p.M) throw DecodeError("del_decode: prefix matches several codebook entries");
            hit = i;
        }
        if (hit == p.M) throw DecodeError("del_decode: received prefix matches no codebook entry");
        if (taken[hit]) throw DecodeError("del_decode: two received strings match one codebook entry");
        taken[hit] = true;
        received_of_entry[hit] = r;
    }
    return received_of_entry;
}

Message assemble_and_verify(const Word& received, const DelParams& p, const DeletionCodec& codec,
                            const Int& d1, const std::vector<unsigned>& received_of_entry,
                            std::size_t head_skip) {
    // Fixed extraction offsets; a segment that lost its whole region is empty.
    const BitString& y0 = received.at(received_of_entry[0]);
    BitString stream = y0.suffix_from(std::min(head_skip, y0.size()));
    for (unsigned i = 1; i < p.M; ++i) {
        const BitString& y = received.at(received_of_entry[i]);
        stream.append(y.suffix_from(std::min<std::size_t>(p.lp, y.size())));
    }
    const BitString d2 = codec.decode(stream, p.payload_container);

    const Message out{d1, d2};
    const Word reencoded = del_encode(out, p);
    std::size_t ops = 0;
    for (unsigned i = 0; i < p.M; ++i)
        ops += deletion_distance(reencoded.at(i), received.at(received_of_entry[i]));
    if (ops > p.K) throw DecodeError("del_decode: corrected word is outside the radius-K ball");
    return out;
}

Message decode_pure(const Word& received, const DelParams& p, const DeletionCodec& codec) {
    // Unique string whose first lp-K bits are all ones identifies string one.
    unsigned i0 = p.M;
    const std::size_t head = p.lp - p.K;
    for (unsigned i = 0; i < p.M; ++i) {
        if (received.at(i).prefix(head).weight() == head) {
            if (i0 != p.M) throw DecodeError("del_decode: several all-ones prefixes");
            i0 = i;
        }
    }
    if (i0 == p.M) throw DecodeError("del_decode: no all-ones prefix found");

    DeletionCodebook book;
    Int d1;
    if (p.K == 0) {
        std::vector<BitString> prefixes;
        for (const auto& s : received) prefixes.push_back(s.prefix(p.lp));
        std::sort(prefixes.begin(), prefixes.end(), std::greater<>());
        book = DeletionCodebook{prefixes, p.lp, p.M, p.K};
        d1 = deletion_index_decode(book, &del_shared_cache());
        return assemble_and_verify(received, p, codec, d1, match_strings_pure(received, book, p), p.lp);
    }

    // The fixed window [lp, lp + alpha_rs - K) is a subsequence of the parity
    // block with exactly K bits missing, wherever the deletions landed.
    const BitString window = received.at(i0).slice(p.lp, p.alpha_rs - p.K);
    const BitString parity_msg = codec.decode(window, p.alpha_rs);

    std::vector<BitString> prefixes;
    for (const auto& s : received) prefixes.push_back(s.prefix(p.lp));
    BitString s1 = indicator_vector(prefixes, p.lp);
    s1.append(parity_msg.prefix(p.indicator_parity_bits));
    const BitString indicator = rs_correct(s1, *p.rs_indicator);

    std::vector<BitString> support = indicator_support(indicator, p.lp);
    if (support.size() != p.M) throw DecodeError("del_decode: corrected indicator weight differs from M");
    std::sort(support.begin(), support.end(), std::greater<>());
    book = DeletionCodebook{support, p.lp, p.M, p.K};
    d1 = deletion_index_decode(book, &del_shared_cache());
    return assemble_and_verify(received, p, codec, d1, match_strings_pure(received, book, p),
                               p.lp + p.alpha_rs);
}

Message decode_mixed(const Word& received, const DelParams& p, const DeletionCodec& codec) {
    const BitString ones = BitString::all_ones(p.lp);
    struct Trial {
        unsigned i0;
        std::size_t ell, omega;
        std::size_t cost;
    };
    std::vector<Trial> trials;
    for (unsigned i = 0; i < p.M; ++i) {
        const BitString& y = received.at(i);
        const std::size_t lo = p.lp > p.K ? p.lp - p.K : 0;
        for (std::size_t ell = lo; ell <= std::min<std::size_t>(p.lp + p.K, y.size()); ++ell) {
            if (deletion_distance(y.prefix(ell), ones) > p.K) continue;
            const std::size_t wlo = p.alpha_rs > p.K ? p.alpha_rs - p.K : 0;
            for (std::size_t omega = wlo; omega <= p.alpha_rs + p.K; ++omega) {
                if (ell + omega > y.size()) break;
                const std::size_t cost = (ell > p.lp ? ell - p.lp : p.lp - ell) +
                                         (omega > p.alpha_rs ? omega - p.alpha_rs : p.alpha_rs - omega);
                trials.push_back({i, ell, omega, cost});
            }
        }
    }
    std::stable_sort(trials.begin(), trials.end(), [](const Trial& a, const Trial& b) { return a.cost < b.cost; });

    // Strings within budget always cover the prefix region: |y| >= L-K >= lp.
    std::vector<BitString> prefixes;
    for (const auto& s : received) prefixes.push_back(s.prefix(p.lp));

    std::string last_reason = "no candidate parity window";
    for (const Trial& t : trials) {
        try {
            const BitString window = received.at(t.i0).slice(t.ell, t.omega);
            const BitString parity_msg = codec.decode(window, p.alpha_rs);
            BitString s1 = indicator_vector(prefixes, p.lp);
            s1.append(parity_msg.prefix(p.indicator_parity_bits));
            const BitString indicator = rs_correct(s1, *p.rs_indicator);
            std::vector<BitString> support = indicator_support(indicator, p.lp);
            if (support.size() != p.M) throw DecodeError("corrected indicator weight differs from M");
            std::sort(support.begin(), support.end(), std::greater<>());
            DeletionCodebook book{support, p.lp, p.M, p.K};
            const Int d1 = deletion_index_decode(book, &del_shared_cache());

            // A received window of one fixed length matches at most one entry,
            // but windows of different lengths can reach distinct entries, so
            // the compatibility relation need not be one-to-one. Enumerate its
            // perfect matchings; ball disjointness lets only the true message
            // survive re-encode verification.
            std::vector<std::vector<unsigned>> candidates(p.M);
            for (unsigned i = 0; i < p.M; ++i) {
                for (unsigned r = 0; r < p.M; ++r) {
                    const BitString& y = received.at(r);
                    const std::size_t lo = p.lp > p.K ? p.lp - p.K : 0;
                    const std::size_t hi = std::min<std::size_t>(p.lp + p.K, y.size());
                    for (std::size_t ell = lo; ell <= hi; ++ell) {
                        if (deletion_distance(y.prefix(ell), book.entries[i]) <= p.K) {
                            candidates[i].push_back(r);
                            break;
                        }
                    }
                }
                if (candidates[i].empty()) throw DecodeError("codebook entry matches no received string");
            }
            if (std::find(candidates[0].begin(), candidates[0].end(), t.i0) == candidates[0].end())
                throw DecodeError("parity carrier does not match entry one");

            std::vector<unsigned> assignment(p.M, p.M);
            std::vector<bool> used(p.M, false);
            std::string reason = "no matching led to a verified decode";
            std::function<Message(unsigned)> search = [&](unsigned entry) -> Message {
                if (entry == p.M) return assemble_and_verify(received, p, codec, d1, assignment, t.ell + t.omega);
                const auto& options = entry == 0 ? std::vector<unsigned>{t.i0} : candidates[entry];
                for (unsigned r : options) {
                    if (used[r]) continue;
                    used[r] = true;
                    assignment[entry] = r;
                    try {
                        return search(entry + 1);
                    } catch (const DecodeError& e) {
                        reason = e.what();
                    }
                    used[r] = false;
                }
                throw DecodeError(reason);
            };
            return search(0);
        } catch (const DecodeError& e) {
            last_reason = e.what();
        } catch (const ParamError& e) {
            last_reason = e.what();
        }
    }
    throw DecodeError(std::string("del_decode: all parity-window candidates failed (") + last_reason + ")");
}

}  // namespace

Message del_decode(const Word& received, const DelParams& p) {
    if (received.size() != p.M)
        throw DecodeError("del_decode: expected " + std::to_string(p.M) + " distinct strings, got " +
                          std::to_string(received.size()));
    std::size_t max_len = 0;
    for (const auto& s : received) {
        if (s.size() + p.K < p.L || s.size() > p.L + p.K)
            throw DecodeError("del_decode: string length outside [L-K, L+K]");
        max_len = std::max(max_len, s.size());
    }
    const DeletionCodec& codec = deletion_codec(p.codec_id);
    try {
        if (max_len <= p.L) return decode_pure(received, p, codec);
        return decode_mixed(received, p, codec);
    } catch (const ParamError& e) {
        throw DecodeError(std::string("del_decode: ") + e.what());
    }
}

RedundancyReport del_redundancy_report(const DelParams& p) {
    RedundancyReport r;
    r.log2_word_space = log2_int(binomial(pow2(p.L), p.M));
    r.log2_d1_domain = log2_int(p.d1_domain);
    r.d2_bits = p.d2_bits;
    r.r_achieved = r.log2_word_space - r.log2_d1_domain - static_cast<double>(p.d2_bits);
    r.bound_error_term = 4.0 * p.K * std::log2(static_cast<double>(p.M) * static_cast<double>(p.L));
    r.bound_index_term = (12.0 * p.K + 2.0) * std::log2(static_cast<double>(p.M));
    r.codec_excess_bits = static_cast<double>(p.alpha_rs - p.indicator_parity_bits) +
                          static_cast<double>(p.payload_container - p.d2_bits);
    return r;
}

}  // namespace sliced
