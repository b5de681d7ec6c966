#include "sliced/hamming_index.hpp"

#include <cassert>

#include "sliced/errors.hpp"

namespace sliced {

Int hamming_ball_size(unsigned lp, unsigned K) {
    if (2u * K > lp) throw ParamError("hamming_ball_size: requires 2K <= lp");
    Int q = 0;
    for (unsigned i = 0; i <= 2 * K; ++i) q += binomial(Int(lp), i);
    return q;
}

Int count_prefix_hamming(const BitString& a, const std::vector<BitString>& A, unsigned lp, unsigned K) {
    if (a.size() > lp) throw ParamError("count_prefix_hamming: prefix longer than lp");
    const unsigned ell = static_cast<unsigned>(a.size());
    Int total = 0;
    for (const auto& c : A) {
        if (c.size() != lp) throw ParamError("count_prefix_hamming: set element length differs from lp");
        std::size_t d = 0;
        for (unsigned i = 0; i < ell; ++i) d += a.bit(i) != c.bit(i);
        if (d > 2ull * K) continue;
        const unsigned long budget = 2ull * K - d;
        for (unsigned long i = 0; i <= budget; ++i) total += binomial(Int(lp - ell), i);
    }
    return total;
}

namespace {

// Shared inner loop of the greedy generator: grows one entry bit by bit,
// consuming rank mass q. counter(prefix_with_0) must return the number of
// length-lp extensions of the prefix that collide with earlier entries.
template <typename Counter>
BitString grow_entry(Int q, unsigned lp, const Counter& counter) {
    BitString a;
    for (unsigned ell = 1; ell <= lp; ++ell) {
        BitString with0 = a;
        with0.append_bit(false);
        const Int room = pow2(lp - ell) - counter(with0);
        if (room >= q) {
            a = std::move(with0);
        } else {
            q -= room;
            a.append_bit(true);
        }
        assert(q > 0);
    }
    if (q != 1) throw Error("greedy codebook generation: rank mass did not reduce to 1");
    return a;
}

}  // namespace

HammingCodebook greedy_codebook_hamming(const GapSequence& seq, unsigned lp, unsigned M, unsigned K) {
    const Int Q = hamming_ball_size(lp, K);
    if (seq.q.size() != M) throw ParamError("greedy_codebook_hamming: gap sequence size differs from M");
    (void)gap_rank(seq, lp, M, Q);  // validates q_1 = 2^lp, gaps >= Q, q_M >= Q
    HammingCodebook book{{}, lp, M, K};
    for (unsigned i = 0; i < M; ++i) {
        book.entries.push_back(grow_entry(seq.q[i], lp, [&](const BitString& prefix) {
            return count_prefix_hamming(prefix, book.entries, lp, K);
        }));
    }
    return book;
}

void validate_codebook(const HammingCodebook& book) {
    if (book.entries.size() != book.M || book.M < 1) throw ParamError("codebook: wrong entry count");
    if (book.entries[0] != BitString::all_ones(book.lp)) throw ParamError("codebook: first entry must be all-ones");
    for (unsigned i = 0; i < book.M; ++i) {
        if (book.entries[i].size() != book.lp) throw ParamError("codebook: entry length differs from lp");
        if (i + 1 < book.M && !(book.entries[i] > book.entries[i + 1]))
            throw ParamError("codebook: entries must be strictly descending");
        for (unsigned j = i + 1; j < book.M; ++j)
            if (hamming_distance(book.entries[i], book.entries[j]) < 2ull * book.K + 1)
                throw ParamError("codebook: pairwise Hamming distance below 2K+1");
    }
}

GapSequence codebook_rank_hamming(const HammingCodebook& book) {
    validate_codebook(book);
    GapSequence seq;
    seq.lp = book.lp;
    seq.gap = hamming_ball_size(book.lp, book.K);
    std::vector<BitString> prior;
    for (unsigned i = 0; i < book.M; ++i) {
        const BitString& a = book.entries[i];
        // Inverting the generation loop: q_i = decimal(a_i) + 1 - sum of the
        // conflict counts charged at each 1-bit.
        Int q = a.to_integer() + 1;
        for (unsigned ell = 1; ell <= book.lp; ++ell) {
            if (!a.bit(ell - 1)) continue;
            BitString with0 = a.prefix(ell - 1);
            with0.append_bit(false);
            q -= count_prefix_hamming(with0, prior, book.lp, book.K);
        }
        seq.q.push_back(q);
        prior.push_back(a);
    }
    return seq;
}

Int hamming_index_domain(unsigned lp, unsigned M, unsigned K) {
    return gap_domain_size(lp, M, hamming_ball_size(lp, K));
}

HammingCodebook hamming_index_encode(const Int& d, unsigned lp, unsigned M, unsigned K) {
    const Int Q = hamming_ball_size(lp, K);
    return greedy_codebook_hamming(gap_unrank(d, lp, M, Q), lp, M, K);
}

Int hamming_index_decode(const HammingCodebook& book) {
    const Int Q = hamming_ball_size(book.lp, book.K);
    return gap_rank(codebook_rank_hamming(book), book.lp, book.M, Q);
}

}  // namespace sliced
