#include "sliced/combinatorics.hpp"

#include <algorithm>

#include "sliced/errors.hpp"

namespace sliced {

Int binomial(const Int& n, unsigned long m) {
    if (sgn(n) < 0) throw ParamError("binomial: negative n");
    if (Int(m) > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), m);
    return r;
}

std::vector<Int> combination_unrank(const Int& d, const Int& n, unsigned long m) {
    if (Int(m) > n) throw ParamError("combination_unrank: m exceeds n");
    const Int total = binomial(n, m);
    if (d < 1 || d > total) throw ParamError("combination_unrank: rank out of [1, binomial(n,m)]");
    Int r = d - 1;
    std::vector<Int> out(m);
    Int hi = n;
    for (unsigned long i = m; i >= 1; --i) {
        // Largest s with binomial(s-1, i) <= r; binary search over [i, hi].
        Int lo = i, high = hi, s = i;
        while (lo <= high) {
            Int mid = (lo + high) / 2;
            if (binomial(mid - 1, i) <= r) {
                s = mid;
                lo = mid + 1;
            } else {
                high = mid - 1;
            }
        }
        r -= binomial(s - 1, i);
        out[i - 1] = s;
        hi = s - 1;
    }
    return out;
}

Int combination_rank(const std::vector<Int>& set, const Int& n, unsigned long m) {
    if (set.size() != m) throw ParamError("combination_rank: set size differs from m");
    std::vector<Int> s = set;
    std::sort(s.begin(), s.end());
    Int r = 0;
    for (unsigned long i = 0; i < m; ++i) {
        if (s[i] < 1 || s[i] > n) throw ParamError("combination_rank: element out of [1, n]");
        if (i > 0 && s[i] == s[i - 1]) throw ParamError("combination_rank: elements must be distinct");
        r += binomial(s[i] - 1, i + 1);
    }
    return r + 1;
}

Int gap_domain_size(unsigned lp, unsigned M, const Int& G) {
    const Int space = pow2(lp);
    if (space <= Int(M) * G) return 0;
    return binomial(space - Int(M) * G + (M - 1), M - 1);
}

GapSequence gap_unrank(const Int& d, unsigned lp, unsigned M, const Int& G) {
    if (M < 1) throw ParamError("gap_unrank: M must be at least 1");
    if (G < 1) throw ParamError("gap_unrank: gap must be at least 1");
    const Int space = pow2(lp);
    if (space <= Int(M) * G)
        throw ParamError("gap_unrank: requires 2^lp > M*G (2^" + std::to_string(lp) + " <= " +
                         Int(Int(M) * G).get_str() + ")");
    const Int n = space - Int(M) * G + (M - 1);
    const auto ascending = combination_unrank(d, n, M - 1);  // q'_M < ... < q'_2
    GapSequence seq;
    seq.lp = lp;
    seq.gap = G;
    seq.q.resize(M);
    seq.q[0] = space;
    for (unsigned i = 2; i <= M; ++i) seq.q[i - 1] = ascending[M - i] + Int(M - i + 1) * (G - 1);
    return seq;
}

Int gap_rank(const GapSequence& seq, unsigned lp, unsigned M, const Int& G) {
    const Int space = pow2(lp);
    if (seq.q.size() != M) throw ParamError("gap_rank: sequence size differs from M");
    if (seq.q[0] != space) throw ParamError("gap_rank: q_1 must equal 2^lp");
    for (unsigned i = 0; i + 1 < M; ++i)
        if (seq.q[i] - seq.q[i + 1] < G) throw ParamError("gap_rank: consecutive gap below G");
    if (seq.q[M - 1] < G) throw ParamError("gap_rank: q_M below G");
    const Int n = space - Int(M) * G + (M - 1);
    std::vector<Int> primed(M - 1);
    for (unsigned i = 2; i <= M; ++i) {
        primed[i - 2] = seq.q[i - 1] - Int(M - i + 1) * (G - 1);
        if (primed[i - 2] < 1 || primed[i - 2] > n) throw ParamError("gap_rank: value outside unranking domain");
    }
    return combination_rank(primed, n, M - 1);
}

}  // namespace sliced
