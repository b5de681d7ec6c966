#include <set>

#include "doctest.h"
#include "sliced/deletion_codec.hpp"
#include "sliced/errors.hpp"

using namespace sliced;

TEST_CASE("vt sizing") {
    const auto& vt = deletion_codec("vt1");
    CHECK(vt.k() == 1);
    CHECK(vt.codeword_len(0) == 0);
    CHECK(vt.codeword_len(4) == 7);
    CHECK(vt.codeword_len(12) == 17);
    CHECK(vt.codeword_len(48) == 54);
    CHECK(codec_overhead("vt1", 48) == 54);
    // capacity is a staircase that climbs by at most one
    for (std::size_t n = 1; n < 600; ++n) {
        const std::size_t step = vt.capacity(n) - vt.capacity(n - 1);
        CHECK(step <= 1);
    }
    for (std::size_t n : {1u, 9u, 33u, 100u}) CHECK(vt.capacity(vt.codeword_len(n)) >= n);
}

TEST_CASE("vt corrects every single deletion, exhaustive through n=10") {
    const auto& vt = deletion_codec("vt1");
    for (unsigned n : {1u, 2u, 5u, 8u, 10u}) {
        const std::size_t N = vt.codeword_len(n);
        for (unsigned v = 0; v < (1u << n); ++v) {
            const BitString m = BitString::from_integer(Int(v), n);
            const BitString c = vt.encode(m, N);
            CHECK(vt.decode(c, N) == m);
            for (std::size_t p = 0; p < N; ++p) CHECK(vt.decode(c.erased(p), N) == m);
        }
    }
}

TEST_CASE("vt corrects every single insertion, exhaustive through n=8") {
    const auto& vt = deletion_codec("vt1");
    for (unsigned n : {2u, 5u, 8u}) {
        const std::size_t N = vt.codeword_len(n);
        for (unsigned v = 0; v < (1u << n); ++v) {
            const BitString m = BitString::from_integer(Int(v), n);
            const BitString c = vt.encode(m, N);
            for (std::size_t p = 0; p <= N; ++p)
                for (unsigned b = 0; b <= 1; ++b) CHECK(vt.decode(c.inserted(p, b != 0), N) == m);
        }
    }
}

TEST_CASE("vt codewords share the zero position-checksum") {
    const auto& vt = deletion_codec("vt1");
    const std::size_t N = vt.codeword_len(9);
    for (unsigned v = 0; v < (1u << 9); ++v) {
        const BitString c = vt.encode(BitString::from_integer(Int(v), 9), N);
        std::size_t s = 0;
        for (std::size_t i = 0; i < N; ++i)
            if (c.bit(i)) s += i + 1;
        CHECK(s % (N + 1) == 0);
    }
}

TEST_CASE("vt rejects garbage") {
    const auto& vt = deletion_codec("vt1");
    const std::size_t N = vt.codeword_len(8);
    const BitString c = vt.encode(BitString::from_integer(Int(77), 8), N);
    BitString two_short = c.erased(0).erased(0);
    CHECK_THROWS_AS(vt.decode(two_short, N), DecodeError);
    BitString flipped = c;
    flipped.flip_bit(3);  // substitution breaks the checksum at full length
    CHECK_THROWS_AS(vt.decode(flipped, N), DecodeError);
}

TEST_CASE("brute-force codec at radius one") {
    const auto& bf = deletion_codec("brute4k1");
    const std::size_t N = bf.codeword_len(4);
    // codewords have pairwise disjoint radius-1 deletion balls
    std::vector<BitString> codewords;
    for (unsigned v = 0; v < 16; ++v) codewords.push_back(bf.encode(BitString::from_integer(Int(v), 4), N));
    for (unsigned i = 0; i < 16; ++i)
        for (unsigned j = i + 1; j < 16; ++j) CHECK(lcs_length(codewords[i], codewords[j]) + 1 < N);
    for (unsigned v = 0; v < 16; ++v) {
        const BitString m = BitString::from_integer(Int(v), 4);
        CHECK(bf.decode(codewords[v], N) == m);
        for (std::size_t p = 0; p < N; ++p) CHECK(bf.decode(codewords[v].erased(p), N) == m);
    }
}

TEST_CASE("brute-force codec at radius two") {
    const auto& bf = deletion_codec("brute4k2");
    const std::size_t N = bf.codeword_len(4);
    for (unsigned v = 0; v < 16; ++v) {
        const BitString m = BitString::from_integer(Int(v), 4);
        const BitString c = bf.encode(m, N);
        CHECK(bf.decode(c, N) == m);
        std::set<BitString> hits;
        for (std::size_t p = 0; p < N; ++p) {
            const BitString one = c.erased(p);
            hits.insert(one);
            for (std::size_t q2 = 0; q2 < one.size(); ++q2) hits.insert(one.erased(q2));
        }
        for (const auto& h : hits) CHECK(bf.decode(h, N) == m);
    }
}

TEST_CASE("brute-force codec handles mixed errors within its radius") {
    const auto& bf = deletion_codec("brute4k2");
    const std::size_t N = bf.codeword_len(4);
    const BitString m = BitString::from_integer(Int(9), 4);
    const BitString c = bf.encode(m, N);
    // one deletion plus one insertion still lands within deletion distance 2
    const BitString mixed = c.erased(2).inserted(0, true);
    CHECK(bf.decode(mixed, N) == m);
}

TEST_CASE("identity codec is the error-free baseline") {
    const auto& id = deletion_codec("identity");
    CHECK(id.k() == 0);
    CHECK(id.capacity(37) == 37);
    const BitString m = BitString::from_string("0101110");
    CHECK(id.encode(m, 7) == m);
    CHECK(id.decode(m, 7) == m);
    CHECK_THROWS_AS(id.decode(m.erased(0), 7), DecodeError);
}

TEST_CASE("registry") {
    CHECK_THROWS_AS(deletion_codec("nope"), ParamError);
    CHECK_THROWS_AS(deletion_codec("brutexky"), ParamError);
    CHECK(&deletion_codec("vt1") == &deletion_codec("vt1"));
    // unsupported profile: the searched codec is pinned to its message size
    CHECK_THROWS_AS(codec_overhead("brute4k2", 168), ParamError);
}
