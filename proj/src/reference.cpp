#include "sliced/reference.hpp"

#include <cmath>

#include "sliced/deletion_index.hpp"
#include "sliced/errors.hpp"

namespace sliced::reference {

Int count_prefix_hamming_enum(const BitString& a, const std::vector<BitString>& A, unsigned lp, unsigned K) {
    if (a.size() > lp || lp > 24) throw ParamError("count_prefix_hamming_enum: oracle scale exceeded");
    const unsigned free_bits = lp - static_cast<unsigned>(a.size());
    Int total = 0;
    for (std::size_t v = 0; v < (std::size_t(1) << free_bits); ++v) {
        BitString c = a;
        for (unsigned b = 0; b < free_bits; ++b) c.append_bit((v >> (free_bits - 1 - b)) & 1u);
        for (const auto& ref : A)
            if (hamming_distance(c, ref) <= 2ull * K) ++total;
    }
    return total;
}

Int count_prefix_deletion_enum(const BitString& a, const BitString& c, unsigned K) {
    const unsigned lp = static_cast<unsigned>(c.size());
    if (a.size() > lp || lp > 12) throw ParamError("count_prefix_deletion_enum: oracle scale exceeded");
    const unsigned free_bits = lp - static_cast<unsigned>(a.size());
    Int total = 0;
    for (std::size_t v = 0; v < (std::size_t(1) << free_bits); ++v) {
        BitString cp = a;
        for (unsigned b = 0; b < free_bits; ++b) cp.append_bit((v >> (free_bits - 1 - b)) & 1u);
        total += count_pair_deletions(cp, c, K, K);
    }
    return total;
}

double log2_binomial_sum(const Int& n, unsigned m) {
    double acc = 0;
    for (unsigned i = 0; i < m; ++i) {
        acc += log2_int(n - i) - std::log2(static_cast<double>(i + 1));
    }
    return acc;
}

}  // namespace sliced::reference
