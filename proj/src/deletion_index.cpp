#include "sliced/deletion_index.hpp"

#include <algorithm>
#include <cassert>

#include "sliced/errors.hpp"
#include "sliced/hamming_index.hpp"

namespace sliced {

Int deletion_interference_size(unsigned lp, unsigned K) {
    if (K > lp) throw ParamError("deletion_interference_size: requires K <= lp");
    Int p = 0;
    for (unsigned r = 0; r <= K; ++r) {
        const Int b = binomial(Int(lp), r);
        p += b * b * pow2(r);
    }
    return p;
}

namespace {

void subsets_up_to(std::size_t n, unsigned r, std::vector<std::vector<std::size_t>>& out) {
    out.push_back({});
    std::vector<std::size_t> cur;
    // Iterative DFS over combinations of each size up to r.
    struct Frame {
        std::size_t next;
    };
    // Simple recursive lambda.
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == r) return;
        for (std::size_t i = from; i < n; ++i) {
            cur.push_back(i);
            out.push_back(cur);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    if (r > 0) rec(rec, 0);
}

BitString delete_positions(const BitString& c, const std::vector<std::size_t>& del) {
    BitString out;
    std::size_t di = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (di < del.size() && del[di] == i) {
            ++di;
            continue;
        }
        out.append_bit(c.bit(i));
    }
    return out;
}

}  // namespace

Int count_pair_deletions(const BitString& c1, const BitString& c2, unsigned r1, unsigned r2) {
    if (c1.size() > 16 || c2.size() > 16 || r1 > 3 || r2 > 3)
        throw ParamError("count_pair_deletions: oracle limited to length 16 and radius 3");
    std::vector<std::vector<std::size_t>> d1s, d2s;
    subsets_up_to(c1.size(), std::min<unsigned>(r1, c1.size()), d1s);
    subsets_up_to(c2.size(), std::min<unsigned>(r2, c2.size()), d2s);
    Int count = 0;
    for (const auto& d1 : d1s) {
        const BitString s1 = delete_positions(c1, d1);
        for (const auto& d2 : d2s) {
            if (c2.size() - d2.size() != s1.size()) continue;
            if (delete_positions(c2, d2) == s1) ++count;
        }
    }
    return count;
}

Int dp_base_count(unsigned f, unsigned k2, unsigned r1, unsigned r2) {
    // Zero when no deletion budget can equalize the lengths.
    if (f > k2 + r1 || k2 > f + r2) return 0;
    Int total = 0;
    for (unsigned j = 0; j <= std::min(r2, k2); ++j) {  // j = |D2|
        const long long i_ll = static_cast<long long>(f) - static_cast<long long>(k2) + j;  // i = |D1|
        if (i_ll < 0) continue;
        const unsigned i = static_cast<unsigned>(i_ll);
        if (i > r1 || i > f) continue;
        total += binomial(Int(k2), j) * binomial(Int(f), i) * pow2(i);
    }
    return total;
}

Int dp_prefix_count(const BitString& a, const BitString& c, unsigned K) {
    const unsigned lp = static_cast<unsigned>(c.size());
    const unsigned ell = static_cast<unsigned>(a.size());
    if (ell > lp) throw ParamError("dp_prefix_count: prefix longer than the full string");
    const unsigned f = lp - ell;
    const unsigned R = K + 1;

    // level[k2][r1][r2], k1 ascending from 0 to ell.
    auto idx = [&](unsigned k2, unsigned r1, unsigned r2) { return (k2 * R + r1) * R + r2; };
    std::vector<Int> prev((lp + 1) * R * R), cur((lp + 1) * R * R);

    for (unsigned k2 = 0; k2 <= lp; ++k2)
        for (unsigned r1 = 0; r1 < R; ++r1)
            for (unsigned r2 = 0; r2 < R; ++r2) prev[idx(k2, r1, r2)] = dp_base_count(f, k2, r1, r2);

    for (unsigned k1 = 1; k1 <= ell; ++k1) {
        const bool pinned = a.bit(ell - k1);  // a_{ell-k1+1}, the first bit of a's k1-suffix
        for (unsigned k2 = 0; k2 <= lp; ++k2) {
            for (unsigned r1 = 0; r1 < R; ++r1) {
                for (unsigned r2 = 0; r2 < R; ++r2) {
                    Int v = 0;
                    // Pinned first bit of c' survives: it must match the first
                    // surviving bit of c's k2-suffix, at global position k.
                    for (unsigned k = lp - k2 + 1; k <= lp; ++k) {
                        if (c.bit(k - 1) != pinned) continue;
                        const long long nr2 =
                            static_cast<long long>(r2) - (static_cast<long long>(k) - (lp - k2 + 1));
                        if (nr2 < 0) break;  // deeper k only deletes more
                        v += prev[idx(lp - k, r1, static_cast<unsigned>(nr2))];
                    }
                    // Pinned first bit of c' deleted. Its value is fixed, so no
                    // doubling here, unlike a free leading bit.
                    if (r1 >= 1) v += prev[idx(k2, r1 - 1, r2)];
                    cur[idx(k2, r1, r2)] = std::move(v);
                }
            }
        }
        std::swap(prev, cur);
    }
    return prev[idx(lp, K, K)];
}

Int PrefixCountCache::get(const BitString& a, const BitString& c, unsigned K) {
    std::string key = a.str();
    key.push_back('|');
    key += c.str();
    key.push_back('|');
    key += std::to_string(K);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    Int v = dp_prefix_count(a, c, K);
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(std::move(key), std::move(v)).first->second;
}

Int count_prefix_deletion(const BitString& a, const std::vector<BitString>& A, unsigned K,
                          PrefixCountCache* cache) {
    Int total = 0;
    for (const auto& c : A) total += cache ? cache->get(a, c, K) : dp_prefix_count(a, c, K);
    return total;
}

namespace {

template <typename Counter>
BitString grow_entry_del(Int q, unsigned lp, const Counter& counter) {
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

DeletionCodebook greedy_codebook_deletion(const GapSequence& seq, unsigned lp, unsigned M, unsigned K,
                                          PrefixCountCache* cache) {
    const Int P = deletion_interference_size(lp, K);
    if (seq.q.size() != M) throw ParamError("greedy_codebook_deletion: gap sequence size differs from M");
    (void)gap_rank(seq, lp, M, P);
    DeletionCodebook book{{}, lp, M, K};
    for (unsigned i = 0; i < M; ++i) {
        book.entries.push_back(grow_entry_del(seq.q[i], lp, [&](const BitString& prefix) {
            return count_prefix_deletion(prefix, book.entries, K, cache);
        }));
    }
    return book;
}

void validate_codebook(const DeletionCodebook& book) {
    if (book.entries.size() != book.M || book.M < 1) throw ParamError("codebook: wrong entry count");
    if (book.entries[0] != BitString::all_ones(book.lp)) throw ParamError("codebook: first entry must be all-ones");
    for (unsigned i = 0; i < book.M; ++i) {
        if (book.entries[i].size() != book.lp) throw ParamError("codebook: entry length differs from lp");
        if (i + 1 < book.M && !(book.entries[i] > book.entries[i + 1]))
            throw ParamError("codebook: entries must be strictly descending");
        for (unsigned j = i + 1; j < book.M; ++j)
            if (lcs_length(book.entries[i], book.entries[j]) + book.K >= book.lp)
                throw ParamError("codebook: radius-K deletion balls intersect");
    }
}

GapSequence codebook_rank_deletion(const DeletionCodebook& book, PrefixCountCache* cache) {
    validate_codebook(book);
    GapSequence seq;
    seq.lp = book.lp;
    seq.gap = deletion_interference_size(book.lp, book.K);
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
            q -= count_prefix_deletion(with0, prior, book.K, cache);
        }
        seq.q.push_back(q);
        prior.push_back(a);
    }
    return seq;
}

Int deletion_index_domain(unsigned lp, unsigned M, unsigned K) {
    return gap_domain_size(lp, M, deletion_interference_size(lp, K));
}

DeletionCodebook deletion_index_encode(const Int& d, unsigned lp, unsigned M, unsigned K,
                                       PrefixCountCache* cache) {
    const Int P = deletion_interference_size(lp, K);
    return greedy_codebook_deletion(gap_unrank(d, lp, M, P), lp, M, K, cache);
}

Int deletion_index_decode(const DeletionCodebook& book, PrefixCountCache* cache) {
    const Int P = deletion_interference_size(book.lp, book.K);
    return gap_rank(codebook_rank_deletion(book, cache), book.lp, book.M, P);
}

}  // namespace sliced
