#include <random>
#include <set>

#include "doctest.h"
#include "sliced/errors.hpp"
#include "sliced/hamming_index.hpp"
#include "sliced/reference.hpp"

using namespace sliced;

namespace {
BitString bits_of(unsigned v, unsigned len) { return BitString::from_integer(Int(v), len); }
}  // namespace

TEST_CASE("radius-2K ball size") {
    CHECK(hamming_ball_size(3, 1) == 7);
    CHECK(hamming_ball_size(12, 1) == 79);
    CHECK(hamming_ball_size(9, 0) == 1);
    CHECK(hamming_ball_size(21, 2) == 7547);
    CHECK_THROWS_AS(hamming_ball_size(3, 2), ParamError);
}

TEST_CASE("prefix conflict count, closed form") {
    const std::vector<BitString> A{BitString::from_string("111")};
    CHECK(count_prefix_hamming(BitString(), A, 3, 1) == 7);
    CHECK(count_prefix_hamming(BitString::from_string("0"), A, 3, 1) == 3);
    // full-length prefixes: 1 iff within distance 2K of a member
    CHECK(count_prefix_hamming(BitString::from_string("111"), A, 3, 1) == 1);
    CHECK(count_prefix_hamming(BitString::from_string("100"), A, 3, 1) == 1);
    CHECK(count_prefix_hamming(BitString::from_string("000"), A, 3, 1) == 0);
}

TEST_CASE("closed form equals enumeration, multi-element sets") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        const unsigned lp = 3 + rng() % 5;
        const unsigned K = rng() % 3;
        if (2 * K > lp) continue;
        const unsigned ell = rng() % (lp + 1);
        BitString a(ell);
        for (unsigned i = 0; i < ell; ++i)
            if (rng() & 1) a.set_bit(i, true);
        std::vector<BitString> A;
        for (unsigned i = 0, n = 1 + rng() % 4; i < n; ++i) {
            BitString c(lp);
            for (unsigned b = 0; b < lp; ++b)
                if (rng() & 1) c.set_bit(b, true);
            A.push_back(c);
        }
        CHECK(count_prefix_hamming(a, A, lp, K) == reference::count_prefix_hamming_enum(a, A, lp, K));
    }
}

TEST_CASE("binary split identity") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 500; ++t) {
        const unsigned lp = 4 + rng() % 5;
        const unsigned K = 1 + rng() % 2;
        const unsigned ell = rng() % lp;  // strictly below lp
        BitString a(ell);
        for (unsigned i = 0; i < ell; ++i)
            if (rng() & 1) a.set_bit(i, true);
        std::vector<BitString> A;
        for (unsigned i = 0, n = 1 + rng() % 3; i < n; ++i) {
            BitString c(lp);
            for (unsigned b = 0; b < lp; ++b)
                if (rng() & 1) c.set_bit(b, true);
            A.push_back(c);
        }
        BitString a0 = a, a1 = a;
        a0.append_bit(false);
        a1.append_bit(true);
        const Int lhs = pow2(lp - ell) - count_prefix_hamming(a, A, lp, K);
        const Int rhs = (pow2(lp - ell - 1) - count_prefix_hamming(a0, A, lp, K)) +
                        (pow2(lp - ell - 1) - count_prefix_hamming(a1, A, lp, K));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("greedy generation, error-free radius") {
    GapSequence q;
    q.lp = 3;
    q.gap = 1;
    q.q = {Int(8), Int(7)};
    auto book = greedy_codebook_hamming(q, 3, 2, 0);
    CHECK(book.entries[0] == BitString::from_string("111"));
    CHECK(book.entries[1] == BitString::from_string("110"));
    CHECK(codebook_rank_hamming(book).q == q.q);

    q.q = {Int(8), Int(1)};
    book = greedy_codebook_hamming(q, 3, 2, 0);
    CHECK(book.entries[1] == BitString::from_string("000"));
    CHECK(codebook_rank_hamming(book).q == q.q);
}

TEST_CASE("first entry is always all-ones") {
    for (unsigned lp : {7u, 9u}) {
        const Int domain = hamming_index_domain(lp, 2, 1);
        std::mt19937_64 rng(lp);
        for (int t = 0; t < 20; ++t) {
            Int d = 1 + Int(static_cast<unsigned long>(rng())) % domain;
            auto book = hamming_index_encode(d, lp, 2, 1);
            CHECK(book.entries[0] == BitString::all_ones(lp));
        }
    }
}

TEST_CASE("exhaustive bijection and ordering at lp=6, K=1, M=2") {
    const unsigned lp = 6, M = 2, K = 1;
    const Int domain = hamming_index_domain(lp, M, K);
    CHECK(domain == 21);  // 2^6 - 2*22 + 1 ranks
    std::set<std::string> distinct;
    for (Int d = 1; d <= domain; ++d) {
        const auto book = hamming_index_encode(d, lp, M, K);
        validate_codebook(book);
        CHECK(hamming_index_decode(book) == d);
        for (unsigned i = 0; i + 1 < M; ++i) CHECK(book.entries[i] > book.entries[i + 1]);
        std::string key;
        for (const auto& e : book.entries) key += e.str();
        CHECK(distinct.insert(key).second);
    }
}

TEST_CASE("rank characterization by direct lexicographic counting") {
    // decimal(a_i) = q_i - 1 + sum over j<i of #{c : c < a_i, d(c, a_j) <= 2K}
    const unsigned lp = 6, M = 2, K = 1;
    const Int domain = hamming_index_domain(lp, M, K);
    for (Int d = 1; d <= domain; ++d) {
        const auto book = hamming_index_encode(d, lp, M, K);
        const auto seq = codebook_rank_hamming(book);
        for (unsigned i = 0; i < M; ++i) {
            Int count = 0;
            for (unsigned j = 0; j < i; ++j)
                for (unsigned v = 0; v < (1u << lp); ++v) {
                    const BitString c = bits_of(v, lp);
                    if (c < book.entries[i] && hamming_distance(c, book.entries[j]) <= 2 * K) ++count;
                }
            CHECK(book.entries[i].to_integer() == seq.q[i] - 1 + count);
        }
    }
}

TEST_CASE("error-free radius reduces to plain unranking") {
    // With K=0 every gap is 1 and each entry's value is its rank mass minus one.
    const unsigned lp = 5, M = 3;
    const Int domain = hamming_index_domain(lp, M, 0);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        Int d = 1 + Int(static_cast<unsigned long>(rng())) % domain;
        const auto book = hamming_index_encode(d, lp, M, 0);
        const auto seq = codebook_rank_hamming(book);
        for (unsigned i = 0; i < M; ++i) CHECK(book.entries[i].to_integer() == seq.q[i] - 1);
    }
}

TEST_CASE("range violations") {
    CHECK_THROWS_AS(hamming_index_encode(0, 7, 2, 1), ParamError);
    CHECK_THROWS_AS(hamming_index_encode(72, 7, 2, 1), ParamError);
    HammingCodebook bad{{BitString::from_string("1111111"), BitString::from_string("1110000")}, 7, 2, 1};
    bad.entries[1] = BitString::from_string("1111101");  // distance 1 < 3
    CHECK_THROWS_AS(hamming_index_decode(bad), ParamError);
}
