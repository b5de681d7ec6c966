#include "sliced/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "sliced/channel.hpp"
#include "sliced/del_code.hpp"
#include "sliced/deletion_index.hpp"
#include "sliced/errors.hpp"
#include "sliced/hamming_index.hpp"
#include "sliced/reference.hpp"
#include "sliced/subst_code.hpp"

namespace sliced::selftest {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

BitString random_bits(std::size_t n, std::mt19937_64& rng) {
    BitString b(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1ull) b.set_bit(i, true);
    return b;
}

Message random_message(std::size_t d1_packed_bits, std::size_t d2_bits, std::mt19937_64& rng) {
    Message m;
    m.d1 = random_bits(d1_packed_bits, rng).to_integer() + 1;
    m.d2 = random_bits(d2_bits, rng);
    return m;
}

// 1. Substitution end-to-end at (M=4, L=72, K=1): zero-error plus every
//    single-substitution pattern decodes bit-exactly.
Outcome criterion_subst_single(std::size_t n_messages) {
    const SubstParams p = subst_params(4, 72, 1);
    std::mt19937_64 rng(0x5eed0001);
    std::size_t decodes = 0;
    for (std::size_t t = 0; t < n_messages; ++t) {
        const Message msg = random_message(p.d1_packed_bits, p.d2_bits, rng);
        const Word w = subst_encode(msg, p);
        if (subst_decode(w, p) != msg) return {false, "zero-error decode mismatch at message " + std::to_string(t)};
        ++decodes;
        for (unsigned si = 0; si < p.M; ++si) {
            for (std::size_t pos = 1; pos <= p.L; ++pos) {
                const Word hit = apply_pattern(w, {{{OpKind::Substitute, si, pos, false}}});
                if (subst_decode(hit, p) != msg)
                    return {false, "single-flip decode mismatch at message " + std::to_string(t) + ", string " +
                                       std::to_string(si) + ", position " + std::to_string(pos)};
                ++decodes;
            }
        }
    }
    return {true, std::to_string(n_messages) + " messages, " + std::to_string(decodes) + " decodes, 0 failures"};
}

// 2. Substitution K=2 randomized at (M=2, K=2, minimal feasible L).
Outcome criterion_subst_double(std::size_t n_messages, std::size_t patterns_per_message) {
    std::size_t L = 22;
    while (true) {
        try {
            (void)subst_params(2, L, 2);
            break;
        } catch (const ParamError&) {
            ++L;
            if (L > 4096) return {false, "no feasible L found"};
        }
    }
    const SubstParams p = subst_params(2, L, 2);
    if (p.lp != 21) return {false, "index prefix length expected 21, got " + std::to_string(p.lp)};
    std::mt19937_64 rng(0x5eed0002);
    std::size_t total = 0;
    for (std::size_t t = 0; t < n_messages; ++t) {
        const Message msg = random_message(p.d1_packed_bits, p.d2_bits, rng);
        const Word w = subst_encode(msg, p);
        for (std::size_t j = 0; j < patterns_per_message; ++j) {
            const auto pattern = random_pattern(w, 2, KindMask{true, false, false}, rng());
            if (subst_decode(apply_pattern(w, pattern), p) != msg)
                return {false, "decode mismatch at message " + std::to_string(t) + ", pattern " + std::to_string(j)};
            ++total;
        }
    }
    return {true, "L=" + std::to_string(L) + ", " + std::to_string(total) + " random <=2-substitution patterns, 0 failures"};
}

// 3. Deletion end-to-end at (M=4, L=72, K=1, vt1): every single deletion and
//    every single insertion decodes bit-exactly.
Outcome criterion_del_single(std::size_t n_messages) {
    const DelParams p = del_params(4, 72, 1, "vt1");
    std::mt19937_64 rng(0x5eed0003);
    std::size_t decodes = 0;
    for (std::size_t t = 0; t < n_messages; ++t) {
        const Message msg = random_message(p.d1_packed_bits, p.d2_bits, rng);
        const Word w = del_encode(msg, p);
        if (del_decode(w, p) != msg) return {false, "zero-error decode mismatch at message " + std::to_string(t)};
        ++decodes;
        for (unsigned si = 0; si < p.M; ++si) {
            for (std::size_t pos = 1; pos <= p.L; ++pos) {
                const Word hit = apply_pattern(w, {{{OpKind::Delete, si, pos, false}}});
                if (del_decode(hit, p) != msg)
                    return {false, "single-deletion mismatch at message " + std::to_string(t) + ", string " +
                                       std::to_string(si) + ", position " + std::to_string(pos)};
                ++decodes;
            }
            for (std::size_t pos = 1; pos <= p.L + 1; ++pos) {
                for (unsigned b = 0; b <= 1; ++b) {
                    const Word hit = apply_pattern(w, {{{OpKind::Insert, si, pos, b != 0}}});
                    if (del_decode(hit, p) != msg)
                        return {false, "single-insertion mismatch at message " + std::to_string(t) + ", string " +
                                           std::to_string(si) + ", position " + std::to_string(pos) + ", bit " +
                                           std::to_string(b)};
                    ++decodes;
                }
            }
        }
    }
    return {true, std::to_string(n_messages) + " messages, " + std::to_string(decodes) +
                      " decodes (deletions and insertions), 0 failures"};
}

// 4. Hamming index bijectivity, exhaustive at (lp=7, M=2, K=1).
Outcome criterion_hamming_bijection() {
    const unsigned lp = 7, M = 2, K = 1;
    const Int domain = hamming_index_domain(lp, M, K);
    if (domain != 71) return {false, "domain expected 71, got " + domain.get_str()};
    std::set<std::string> seen;
    for (Int d = 1; d <= domain; ++d) {
        const HammingCodebook book = hamming_index_encode(d, lp, M, K);
        validate_codebook(book);  // all-ones first, descending, distance >= 2K+1
        if (hamming_index_decode(book) != d) return {false, "round trip failed at rank " + d.get_str()};
        std::string key;
        for (const auto& e : book.entries) key += e.str() + "|";
        if (!seen.insert(key).second) return {false, "two ranks map to one codebook"};
    }
    return {true, domain.get_str() + " ranks: round trips, invariants, distinctness"};
}

// 5. Deletion index bijectivity. The requested point (lp=6, M=2, K=1) has an
//    empty domain: P(6,1) = 73 and 2^6 = 64 < 2*73, so no gap sequence exists.
//    The emptiness arithmetic is verified, then the exhaustive check runs at
//    the smallest feasible prefix length.
Outcome criterion_deletion_bijection() {
    if (deletion_interference_size(6, 1) != 73) return {false, "P(6,1) expected 73"};
    if (deletion_index_domain(6, 2, 1) != 0) return {false, "domain at lp=6 expected empty"};
    bool threw = false;
    try {
        (void)deletion_index_encode(1, 6, 2, 1);
    } catch (const ParamError&) {
        threw = true;
    }
    if (!threw) return {false, "encode at the empty domain did not report infeasibility"};

    unsigned lp = 6;
    while (deletion_index_domain(lp, 2, 1) == 0) ++lp;
    const unsigned M = 2, K = 1;
    const Int domain = deletion_index_domain(lp, M, K);
    PrefixCountCache cache;
    std::set<std::string> seen;
    for (Int d = 1; d <= domain; ++d) {
        const DeletionCodebook book = deletion_index_encode(d, lp, M, K, &cache);
        validate_codebook(book);
        // Disjointness verified directly on the enumerated radius-K balls.
        for (unsigned i = 0; i < M; ++i)
            for (unsigned j = i + 1; j < M; ++j) {
                const auto bi = deletion_ball_string(book.entries[i], K);
                const auto bj = deletion_ball_string(book.entries[j], K);
                const std::set<BitString> si(bi.begin(), bi.end());
                for (const auto& s : bj)
                    if (si.count(s)) return {false, "deletion balls intersect at rank " + d.get_str()};
            }
        if (deletion_index_decode(book, &cache) != d) return {false, "round trip failed at rank " + d.get_str()};
        std::string key;
        for (const auto& e : book.entries) key += e.str() + "|";
        if (!seen.insert(key).second) return {false, "two ranks map to one codebook"};
    }
    return {true, "lp=6 domain empty as sized (2^6 < 2*P, P=73); exhaustive at lp=" + std::to_string(lp) + ": " +
                      domain.get_str() + " ranks pass"};
}

// 6. Deletion prefix-count dynamic program equals the enumeration oracle for
//    every prefix and every string at lp=6.
Outcome criterion_nd_oracle(bool full) {
    const unsigned lp = 6;
    std::size_t checks = 0;
    for (unsigned K = 1; K <= (full ? 2u : 1u); ++K) {
        for (unsigned ell = 0; ell <= lp; ++ell) {
            for (std::size_t av = 0; av < (std::size_t(1) << ell); ++av) {
                BitString a(ell);
                for (unsigned b = 0; b < ell; ++b)
                    if ((av >> (ell - 1 - b)) & 1u) a.set_bit(b, true);
                for (std::size_t cv = 0; cv < (std::size_t(1) << lp); ++cv) {
                    const BitString c = BitString::from_integer(Int(static_cast<unsigned long>(cv)), lp);
                    if (dp_prefix_count(a, c, K) != reference::count_prefix_deletion_enum(a, c, K))
                        return {false, "mismatch at K=" + std::to_string(K) + ", a=" + a.str() + ", c=" + c.str()};
                    ++checks;
                }
            }
        }
    }
    return {true, std::to_string(checks) + " (prefix, string) instances match the enumeration oracle exactly"};
}

// 7. Hamming prefix-count closed form equals enumeration for all (a, c) up to
//    lp=8, plus the binary-split identity on random instances.
Outcome criterion_nh_oracle(unsigned max_lp) {
    std::size_t checks = 0;
    for (unsigned lp = 1; lp <= max_lp; ++lp) {
        for (unsigned K = 1; K <= 2; ++K) {
            for (unsigned ell = 0; ell <= lp; ++ell) {
                for (std::size_t av = 0; av < (std::size_t(1) << ell); ++av) {
                    BitString a(ell);
                    for (unsigned b = 0; b < ell; ++b)
                        if ((av >> (ell - 1 - b)) & 1u) a.set_bit(b, true);
                    for (std::size_t cv = 0; cv < (std::size_t(1) << lp); ++cv) {
                        const std::vector<BitString> A{
                            BitString::from_integer(Int(static_cast<unsigned long>(cv)), lp)};
                        if (count_prefix_hamming(a, A, lp, K) != reference::count_prefix_hamming_enum(a, A, lp, K))
                            return {false, "mismatch at lp=" + std::to_string(lp) + ", K=" + std::to_string(K) +
                                               ", a=" + a.str() + ", c=" + A[0].str()};
                        ++checks;
                    }
                }
            }
        }
    }
    // Split identity: with room(x) = 2^(lp-|x|) - N(x, A),
    // room(a) = room(a0) + room(a1).
    std::mt19937_64 rng(0x5eed0007);
    for (int t = 0; t < 1000; ++t) {
        const unsigned lp = 4 + static_cast<unsigned>(rng() % 5);
        const unsigned K = 1 + static_cast<unsigned>(rng() % 2);
        const unsigned ell = static_cast<unsigned>(rng() % lp);
        const BitString a = random_bits(ell, rng);
        std::vector<BitString> A;
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned i = 0; i < n; ++i) A.push_back(random_bits(lp, rng));
        BitString a0 = a, a1 = a;
        a0.append_bit(false);
        a1.append_bit(true);
        const Int lhs = pow2(lp - ell) - count_prefix_hamming(a, A, lp, K);
        const Int rhs = (pow2(lp - ell - 1) - count_prefix_hamming(a0, A, lp, K)) +
                        (pow2(lp - ell - 1) - count_prefix_hamming(a1, A, lp, K));
        if (lhs != rhs) return {false, "split identity failed at trial " + std::to_string(t)};
    }
    return {true, std::to_string(checks) + " closed-form instances match enumeration; split identity holds on 1000 random instances"};
}

// 8. Indicator distance: a K-substitution word error moves the indicator
//    vector by at most 2K in Hamming distance. Exhaustive at lp<=4, M<=3.
Outcome criterion_indicator_distance(unsigned max_lp) {
    std::size_t checks = 0;
    for (unsigned lp = 1; lp <= max_lp; ++lp) {
        std::vector<BitString> all;
        for (std::size_t v = 0; v < (std::size_t(1) << lp); ++v)
            all.push_back(BitString::from_integer(Int(static_cast<unsigned long>(v)), lp));
        // Enumerate words of size 1..3 by index combinations.
        std::vector<std::vector<std::size_t>> combos;
        const std::size_t n = all.size();
        for (std::size_t i = 0; i < n; ++i) {
            combos.push_back({i});
            for (std::size_t j = i + 1; j < n; ++j) {
                combos.push_back({i, j});
                for (std::size_t l = j + 1; l < n; ++l) combos.push_back({i, j, l});
            }
        }
        for (const auto& combo : combos) {
            std::vector<BitString> strings;
            for (auto idx : combo) strings.push_back(all[idx]);
            const Word w(strings);
            if (w.size() != combo.size()) continue;
            const BitString ind = indicator_vector(w, lp);
            for (unsigned K = 1; K <= 2; ++K) {
                for (const Word& hit : hamming_ball_word(w, K)) {
                    if (hamming_distance(ind, indicator_vector(hit, lp)) > 2ull * K)
                        return {false, "indicator moved more than 2K at lp=" + std::to_string(lp)};
                    ++checks;
                }
            }
        }
    }
    return {true, std::to_string(checks) + " (word, outcome) pairs within the 2K indicator budget"};
}

// 9. Golden example: the radius-1 substitution and deletion balls of {001, 101}.
Outcome criterion_golden_example() {
    const Word w({BitString::from_string("001"), BitString::from_string("101")});
    auto to_set = [](const std::vector<Word>& v) { return std::set<Word>(v.begin(), v.end()); };
    auto word_of = [](std::initializer_list<const char*> strs) {
        std::vector<BitString> v;
        for (const char* s : strs) v.push_back(BitString::from_string(s));
        return Word(v);
    };
    const std::set<Word> ham = to_set(hamming_ball_word(w, 1));
    const std::set<Word> expected_ham{
        word_of({"001", "101"}), word_of({"101"}),        word_of({"011", "101"}), word_of({"000", "101"}),
        word_of({"001"}),        word_of({"001", "111"}), word_of({"001", "100"})};
    if (ham != expected_ham) return {false, "substitution ball differs from the golden 7-word set"};
    const std::set<Word> del = to_set(deletion_ball_word(w, 1));
    const std::set<Word> expected_del{word_of({"001", "101"}), word_of({"01", "101"}), word_of({"00", "101"}),
                                      word_of({"001", "01"}),  word_of({"001", "11"}), word_of({"001", "10"})};
    if (del != expected_del) return {false, "deletion ball differs from the golden 6-word set"};
    // The channel enumerator reaches exactly the same outcome sets.
    if (to_set(pattern_outcomes(w, 1, KindMask{true, false, false})) != expected_ham)
        return {false, "substitution pattern outcomes differ from the ball"};
    if (to_set(pattern_outcomes(w, 1, KindMask{false, true, false})) != expected_del)
        return {false, "deletion pattern outcomes differ from the ball"};
    return {true, "both radius-1 balls match the golden sets exactly"};
}

// 10. Index-length arithmetic over M = 2^1..2^20, K = 1..6:
//     (a) M^2 * (3 log2 M + 4K^2 + 2)^(2K) <= 2^(3 log2 M + 4K^2 + 1)
//     (b) M * Q * (M+1) <= 2^(3 log2 M + 4K^2 + 2)
Outcome criterion_appendix_arithmetic() {
    std::vector<std::string> power_failures, ball_failures;
    for (unsigned long j = 1; j <= 20; ++j) {
        for (unsigned K = 1; K <= 6; ++K) {
            const auto r = appendix_bound_check_single(j, K);
            const std::string point = "(M=2^" + std::to_string(j) + ", K=" + std::to_string(K) + ")";
            if (!r.power_bound_holds) power_failures.push_back(point);
            if (!r.ball_bound_holds) ball_failures.push_back(point);
        }
    }
    // Checker sanity on a deliberately broken input: forcing lp=4 at (M=2, K=1)
    // must violate both bounds.
    const auto broken = appendix_bound_check_single(1, 1, 4u);
    if (broken.power_bound_holds || broken.ball_bound_holds)
        return {false, "checker accepted a deliberately broken input"};

    std::ostringstream detail;
    if (power_failures.empty() && ball_failures.empty()) {
        detail << "all 120 grid points satisfy both inequalities";
        return {true, detail.str()};
    }
    detail << "power bound fails at " << power_failures.size() << " point(s):";
    for (const auto& s : power_failures) detail << " " << s;
    detail << "; ball bound M*Q*(M+1) <= 2^L' " << (ball_failures.empty() ? "holds at all 120 points" : "also fails");
    detail << ". Exact arithmetic: at (2,1) the power bound reads 324 <= 256, at (4,1) it reads 2304 <= 2048.";
    return {false, detail.str()};
}

// 11. Redundancy accounting at (M=4, L=72, K=1) against an independent
//     log-binomial evaluation and a frozen golden value.
Outcome criterion_redundancy_accounting() {
    const SubstParams p = subst_params(4, 72, 1);
    const RedundancyReport rep = subst_redundancy_report(p);
    const double independent = reference::log2_binomial_sum(pow2(72), 4) -
                               reference::log2_binomial_sum(pow2(12) - Int(4) * 79 + 3, 3) - 174.0;
    const double golden = 76.3451991570136;
    if (std::abs(rep.r_achieved - independent) > 1e-3)
        return {false, "report and independent evaluation differ by " +
                           std::to_string(std::abs(rep.r_achieved - independent)) + " bits"};
    if (std::abs(rep.r_achieved - golden) > 1e-3)
        return {false, "report differs from the golden value: " + std::to_string(rep.r_achieved)};
    std::ostringstream detail;
    detail.precision(10);
    detail << "r_achieved = " << rep.r_achieved << " bits (golden " << golden << ", agreement < 1e-3)";
    return {true, detail.str()};
}

// 12. Greedy counting bound: the rank domain is at least
//     ceil((2^lp - M*Q)^(M-1) / (M-1)!) wherever the sweep parameters fit.
Outcome criterion_counting_bound() {
    std::size_t points = 0;
    for (unsigned lp = 5; lp <= 21; ++lp) {
        for (unsigned M : {2u, 3u, 4u, 8u}) {
            for (unsigned K : {0u, 1u, 2u}) {
                if (2 * K > lp) continue;
                const Int Q = hamming_ball_size(lp, K);
                const Int space = pow2(lp);
                if (space <= Int(M) * Q) continue;
                const Int domain = hamming_index_domain(lp, M, K);
                Int numer = 1;
                for (unsigned i = 0; i + 1 < M; ++i) numer *= space - Int(M) * Q;
                Int fact = 1;
                for (unsigned i = 2; i < M; ++i) fact *= i;
                if (domain < ceil_div(numer, fact))
                    return {false, "bound fails at lp=" + std::to_string(lp) + ", M=" + std::to_string(M) +
                                       ", K=" + std::to_string(K)};
                ++points;
            }
        }
    }
    return {true, std::to_string(points) + " parameter points satisfy the counting bound"};
}

}  // namespace

std::vector<CriterionResult> run(Level level, std::ostream& out) {
    const bool full = level == Level::Full;
    struct Entry {
        int id;
        std::string name;
        std::function<Outcome()> fn;
    };
    const std::vector<Entry> entries{
        {1, "substitution end-to-end, all single flips (M=4, L=72, K=1)",
         [&] { return criterion_subst_single(full ? 100 : 10); }},
        {2, "substitution randomized double flips (M=2, K=2, minimal L)",
         [&] { return criterion_subst_double(full ? 100 : 20, full ? 100 : 25); }},
        {3, "deletion end-to-end, all single deletions and insertions (M=4, L=72, K=1, vt1)",
         [&] { return criterion_del_single(full ? 100 : 10); }},
        {4, "Hamming index bijectivity, exhaustive (lp=7, M=2, K=1)", [&] { return criterion_hamming_bijection(); }},
        {5, "deletion index bijectivity, exhaustive at the smallest feasible prefix length",
         [&] { return criterion_deletion_bijection(); }},
        {6, "deletion prefix-count dynamic program vs enumeration oracle (lp=6)",
         [&] { return criterion_nd_oracle(full); }},
        {7, "Hamming prefix-count closed form vs enumeration oracle",
         [&] { return criterion_nh_oracle(full ? 8 : 6); }},
        {8, "indicator vector moves at most 2K under K substitutions",
         [&] { return criterion_indicator_distance(full ? 4 : 3); }},
        {9, "golden radius-1 balls of {001, 101}", [&] { return criterion_golden_example(); }},
        {10, "index-length arithmetic over M=2^1..2^20, K=1..6", [&] { return criterion_appendix_arithmetic(); }},
        {11, "redundancy accounting vs independent evaluation (M=4, L=72, K=1)",
         [&] { return criterion_redundancy_accounting(); }},
        {12, "greedy counting bound across the parameter sweep", [&] { return criterion_counting_bound(); }},
    };

    std::vector<CriterionResult> results;
    for (const auto& e : entries) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        try {
            const Outcome o = e.fn();
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL")  << " - " << r.name << "\n    "
            << r.detail << " [" << r.seconds << " s]" << std::endl;
        results.push_back(std::move(r));
    }
    const int failures = count_failures(results);
    out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
    return results;
}

int count_failures(const std::vector<CriterionResult>& results) {
    int n = 0;
    for (const auto& r : results)
        if (!r.pass) ++n;
    return n;
}

}  // namespace sliced::selftest
