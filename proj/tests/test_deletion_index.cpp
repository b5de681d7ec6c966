#include <random>
#include <set>

#include "doctest.h"
#include "sliced/deletion_index.hpp"
#include "sliced/errors.hpp"
#include "sliced/hamming_index.hpp"
#include "sliced/reference.hpp"

using namespace sliced;

namespace {
BitString bits_of(unsigned v, unsigned len) { return BitString::from_integer(Int(v), len); }
}  // namespace

TEST_CASE("per-string interference count") {
    CHECK(deletion_interference_size(3, 1) == 19);
    CHECK(deletion_interference_size(7, 1) == 99);
    CHECK(deletion_interference_size(11, 0) == 1);
    CHECK(deletion_interference_size(9, 1) == 163);
}

TEST_CASE("pair-deletion count oracle") {
    CHECK(count_pair_deletions(BitString::from_string("01"), BitString::from_string("01"), 1, 1) == 3);
    CHECK(count_pair_deletions(BitString::from_string("0110"), BitString::from_string("0110"), 0, 0) == 1);
    CHECK(count_pair_deletions(BitString::from_string("0"), BitString::from_string("1"), 0, 0) == 0);
    CHECK_THROWS_AS(count_pair_deletions(BitString(17), BitString(17), 1, 1), ParamError);
}

TEST_CASE("prefix count via the dynamic program") {
    // empty prefix: every string contributes exactly P
    for (unsigned v = 0; v < 8; ++v) CHECK(dp_prefix_count(BitString(), bits_of(v, 3), 1) == 19);
    for (unsigned v = 0; v < 16; ++v) CHECK(dp_prefix_count(BitString(), bits_of(v, 4), 2) ==
                                            deletion_interference_size(4, 2));
    // radius zero: full-length prefix hits only itself
    CHECK(dp_prefix_count(BitString::from_string("0110"), BitString::from_string("0110"), 0) == 1);
    CHECK(dp_prefix_count(BitString::from_string("0111"), BitString::from_string("0110"), 0) == 0);
}

TEST_CASE("dynamic program equals enumeration, exhaustive at lp=5") {
    for (unsigned K = 1; K <= 2; ++K)
        for (unsigned ell = 0; ell <= 5; ++ell)
            for (unsigned av = 0; av < (1u << ell); ++av) {
                BitString a(ell);
                for (unsigned t = 0; t < ell; ++t)
                    if ((av >> (ell - 1 - t)) & 1u) a.set_bit(t, true);
                for (unsigned cv = 0; cv < 32; ++cv) {
                    const BitString c = bits_of(cv, 5);
                    CHECK(dp_prefix_count(a, c, K) == reference::count_prefix_deletion_enum(a, c, K));
                }
            }
}

TEST_CASE("base case enforces both deletion budgets") {
    // free length 2 against a 1-bit suffix with budgets (2, 0): only |D1| = 1
    // survives; a sum running |D1| to its full budget would also count an
    // illegal |D2| = 1 term.
    CHECK(dp_base_count(2, 1, 2, 0) == 4);
    CHECK(dp_base_count(2, 1, 2, 1) == 8);
    CHECK(dp_base_count(0, 0, 1, 1) == 1);
    CHECK(dp_base_count(3, 1, 1, 0) == 0);  // cannot shrink 3 free bits to 1 with one deletion
}

TEST_CASE("split identity over the last free bit") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 300; ++t) {
        const unsigned lp = 6;
        const unsigned K = 1 + rng() % 2;
        const unsigned ell = rng() % lp;
        BitString a(ell);
        for (unsigned i = 0; i < ell; ++i)
            if (rng() & 1) a.set_bit(i, true);
        std::vector<BitString> A;
        for (unsigned i = 0, n = 1 + rng() % 3; i < n; ++i) A.push_back(bits_of(rng() % 64, lp));
        BitString a0 = a, a1 = a;
        a0.append_bit(false);
        a1.append_bit(true);
        CHECK(count_prefix_deletion(a, A, K) ==
              count_prefix_deletion(a0, A, K) + count_prefix_deletion(a1, A, K));
    }
}

TEST_CASE("empty-prefix count scales linearly in the set size") {
    std::vector<BitString> A;
    const Int P = deletion_interference_size(6, 1);
    for (unsigned i = 1; i <= 4; ++i) {
        A.push_back(bits_of(7 * i + 3, 6));
        CHECK(count_prefix_deletion(BitString(), A, 1) == Int(i) * P);
    }
    CHECK(count_prefix_deletion(BitString(), {}, 1) == 0);
}

TEST_CASE("exhaustive bijection with disjoint deletion balls at lp=9, M=2, K=1") {
    const unsigned lp = 9, M = 2, K = 1;
    const Int domain = deletion_index_domain(lp, M, K);
    CHECK(domain == 187);
    PrefixCountCache cache;
    std::set<std::string> distinct;
    for (Int d = 1; d <= domain; ++d) {
        const auto book = deletion_index_encode(d, lp, M, K, &cache);
        validate_codebook(book);
        CHECK(book.entries[0] == BitString::all_ones(lp));
        CHECK(book.entries[0] > book.entries[1]);
        CHECK(lcs_length(book.entries[0], book.entries[1]) + K < lp);  // disjoint radius-K balls
        CHECK(deletion_index_decode(book, &cache) == d);
        std::string key = book.entries[0].str() + book.entries[1].str();
        CHECK(distinct.insert(key).second);
    }
}

TEST_CASE("golden extremal codebooks at lp=9, M=2, K=1") {
    const auto first = deletion_index_encode(1, 9, 2, 1);
    CHECK(first.entries[0].str() == "111111111");
    CHECK(first.entries[1].str() == "010100010");
    const auto last = deletion_index_encode(187, 9, 2, 1);
    CHECK(last.entries[1].str() == "101100101");
}

TEST_CASE("exhaustive bijection at M=3") {
    const unsigned lp = 9, M = 3, K = 1;
    const Int domain = deletion_index_domain(lp, M, K);
    CHECK(domain == 300);
    PrefixCountCache cache;
    for (Int d = 1; d <= domain; d += 7) {
        const auto book = deletion_index_encode(d, lp, M, K, &cache);
        validate_codebook(book);
        CHECK(deletion_index_decode(book, &cache) == d);
    }
}

TEST_CASE("error-free radius matches the Hamming generator") {
    const unsigned lp = 5, M = 3;
    const Int domain = deletion_index_domain(lp, M, 0);
    CHECK(domain == hamming_index_domain(lp, M, 0));
    for (Int d = 1; d <= domain; d += 11) {
        const auto del_book = deletion_index_encode(d, lp, M, 0);
        const auto ham_book = hamming_index_encode(d, lp, M, 0);
        CHECK(del_book.entries == ham_book.entries);
    }
}

TEST_CASE("single-entry codebook ranks to the top of the space") {
    DeletionCodebook book{{BitString::all_ones(9)}, 9, 1, 1};
    const auto seq = codebook_rank_deletion(book);
    CHECK(seq.q == std::vector<Int>{pow2(9)});
}

TEST_CASE("infeasible parameters are rejected") {
    // At lp=6, K=1 the interference count is 73 and 2^6 < 2*73.
    CHECK(deletion_interference_size(6, 1) == 73);
    CHECK(deletion_index_domain(6, 2, 1) == 0);
    CHECK_THROWS_AS(deletion_index_encode(1, 6, 2, 1), ParamError);
}
