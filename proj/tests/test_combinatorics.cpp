#include <set>

#include "doctest.h"
#include "sliced/combinatorics.hpp"
#include "sliced/errors.hpp"
#include "sliced/hamming_index.hpp"

using namespace sliced;

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(17, 0) == 1);
    CHECK(binomial(12, 2) == 66);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(Int("340282366920938463463374607431768211456"), 1) ==
          Int("340282366920938463463374607431768211456"));
}

TEST_CASE("colex ranking round trips") {
    auto s = combination_unrank(1, 5, 2);
    CHECK(s == std::vector<Int>{1, 2});
    s = combination_unrank(10, 5, 2);
    CHECK(s == std::vector<Int>{4, 5});
    CHECK(combination_rank({Int(1), Int(2)}, 5, 2) == 1);
    CHECK(combination_rank({Int(4), Int(5)}, 5, 2) == 10);
    for (int d = 1; d <= 10; ++d) CHECK(combination_rank(combination_unrank(d, 5, 2), 5, 2) == d);
    // colex order: sets sorted by rank compare on their largest elements first
    for (int d = 1; d < 10; ++d) {
        auto a = combination_unrank(d, 5, 2), b = combination_unrank(d + 1, 5, 2);
        CHECK((a[1] < b[1] || (a[1] == b[1] && a[0] < b[0])));
    }

    CHECK_THROWS_AS(combination_unrank(0, 5, 2), ParamError);
    CHECK_THROWS_AS(combination_unrank(11, 5, 2), ParamError);
    CHECK_THROWS_AS(combination_rank({Int(2), Int(2)}, 5, 2), ParamError);
    CHECK_THROWS_AS(combination_rank({Int(0), Int(2)}, 5, 2), ParamError);

    // bijectivity over a larger domain, m = 3
    const Int total = binomial(9, 3);
    std::set<std::vector<Int>> seen;
    for (Int d = 1; d <= total; ++d) {
        auto set = combination_unrank(d, 9, 3);
        CHECK(combination_rank(set, 9, 3) == d);
        CHECK(seen.insert(set).second);
    }
    CHECK(seen.size() == 84);
}

TEST_CASE("gap sequences") {
    auto g = gap_unrank(5, 3, 2, 1);
    CHECK(g.q == std::vector<Int>{8, 5});
    CHECK(gap_rank(g, 3, 2, 1) == 5);

    auto g2 = gap_unrank(1, 7, 2, 29);
    CHECK(g2.q == std::vector<Int>{128, 29});
    CHECK(gap_rank(g2, 7, 2, 29) == 1);

    CHECK(gap_domain_size(7, 2, 29) == 71);
    for (Int d = 1; d <= 71; ++d) CHECK(gap_rank(gap_unrank(d, 7, 2, 29), 7, 2, 29) == d);

    CHECK_THROWS_AS(gap_unrank(72, 7, 2, 29), ParamError);
    CHECK_THROWS_AS(gap_unrank(1, 5, 2, 17), ParamError);  // 2^5 <= 2*17
}

TEST_CASE("gap sequence invariants over exhaustive and strided domains") {
    struct Combo {
        unsigned lp, M, K;
    };
    for (const Combo c : {Combo{6, 2, 1}, Combo{8, 2, 1}, Combo{8, 3, 1}, Combo{8, 4, 1}, Combo{7, 4, 0}}) {
        const Int G = hamming_ball_size(c.lp, c.K);
        const Int domain = gap_domain_size(c.lp, c.M, G);
        REQUIRE(domain > 0);
        Int stride = 1;
        if (domain > 5000) stride = domain / 5000 + 1;
        for (Int d = 1; d <= domain; d += stride) {
            const auto seq = gap_unrank(d, c.lp, c.M, G);
            CHECK(seq.q[0] == pow2(c.lp));
            for (unsigned i = 0; i + 1 < c.M; ++i) CHECK(seq.q[i] - seq.q[i + 1] >= G);
            CHECK(seq.q[c.M - 1] >= G);
            CHECK(gap_rank(seq, c.lp, c.M, G) == d);
        }
    }
}

TEST_CASE("domain size dominates the sequential-selection count") {
    for (unsigned lp = 5; lp <= 10; ++lp)
        for (unsigned M : {2u, 3u, 4u})
            for (unsigned K : {0u, 1u}) {
                if (2 * K > lp) continue;
                const Int Q = hamming_ball_size(lp, K);
                if (pow2(lp) <= Int(M) * Q) continue;
                Int numer = 1;
                for (unsigned i = 0; i + 1 < M; ++i) numer *= pow2(lp) - Int(M) * Q;
                Int fact = 1;
                for (unsigned i = 2; i < M; ++i) fact *= i;
                CHECK(gap_domain_size(lp, M, Q) >= ceil_div(numer, fact));
            }
}
