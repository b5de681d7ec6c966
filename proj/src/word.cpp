#include "sliced/word.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sliced/errors.hpp"

namespace sliced {

Word::Word(std::vector<BitString> strings) : strings_(std::move(strings)) {
    std::sort(strings_.begin(), strings_.end(), std::greater<>());
    strings_.erase(std::unique(strings_.begin(), strings_.end()), strings_.end());
}

void Word::insert(BitString s) {
    auto it = std::lower_bound(strings_.begin(), strings_.end(), s, std::greater<>());
    if (it != strings_.end() && *it == s) return;
    strings_.insert(it, std::move(s));
}

bool Word::contains(const BitString& s) const {
    return std::binary_search(strings_.begin(), strings_.end(), s, std::greater<>());
}

namespace {

// Flip sets are enumerated as combinations of (string, position) pairs.
void enumerate_flips(const Word& w, std::vector<BitString>& cur, unsigned k, std::size_t from,
                     std::set<Word>& out, std::size_t cap) {
    out.insert(Word(cur));
    if (out.size() > cap) throw ParamError("hamming_ball_word: outcome cap exceeded");
    if (k == 0) return;
    const std::size_t len = w.at(0).size();
    for (std::size_t f = from; f < w.size() * len; ++f) {
        cur[f / len].flip_bit(f % len);
        enumerate_flips(w, cur, k - 1, f + 1, out, cap);
        cur[f / len].flip_bit(f % len);
    }
}

// Distribute at most k deletions over the strings, one string at a time.
void enumerate_word_deletions(const Word& w, std::vector<BitString>& cur, unsigned k, std::size_t idx,
                              std::set<Word>& out, std::size_t cap) {
    if (idx == w.size()) {
        out.insert(Word(cur));
        if (out.size() > cap) throw ParamError("deletion_ball_word: outcome cap exceeded");
        return;
    }
    for (unsigned ki = 0; ki <= k; ++ki) {
        if (ki > w.at(idx).size()) break;
        for (const auto& sub : deletion_ball_string(w.at(idx), ki)) {
            if (w.at(idx).size() - sub.size() != ki) continue;  // exactly ki deletions; ki=0 keeps original
            cur[idx] = sub;
            enumerate_word_deletions(w, cur, k - ki, idx + 1, out, cap);
        }
    }
    cur[idx] = w.at(idx);
}

}  // namespace

std::vector<Word> hamming_ball_word(const Word& w, unsigned k, std::size_t cap) {
    if (w.empty()) return {w};
    for (const auto& s : w)
        if (s.size() != w.at(0).size()) throw ParamError("hamming_ball_word: strings must share one length");
    std::set<Word> out;
    std::vector<BitString> cur(w.begin(), w.end());
    enumerate_flips(w, cur, k, 0, out, cap);
    return {out.begin(), out.end()};
}

std::vector<Word> deletion_ball_word(const Word& w, unsigned k, std::size_t cap) {
    if (w.empty()) return {w};
    std::set<Word> out;
    std::vector<BitString> cur(w.begin(), w.end());
    enumerate_word_deletions(w, cur, k, 0, out, cap);
    return {out.begin(), out.end()};
}

BitString indicator_vector(const std::vector<BitString>& set, unsigned lp) {
    BitString ind(std::size_t(1) << lp);
    for (const auto& s : set) {
        if (s.size() != lp) throw ParamError("indicator_vector: string length differs from lp");
        std::size_t v = 0;
        for (std::size_t i = 0; i < s.size(); ++i) v = (v << 1) | std::size_t(s.bit(i));
        ind.set_bit(v, true);
    }
    return ind;
}

BitString indicator_vector(const Word& w, unsigned lp) { return indicator_vector(w.strings(), lp); }

std::vector<BitString> indicator_support(const BitString& indicator, unsigned lp) {
    if (indicator.size() != (std::size_t(1) << lp))
        throw ParamError("indicator_support: indicator length is not 2^lp");
    std::vector<BitString> out;
    const auto& words = indicator.words();
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        std::uint64_t x = words[wi];
        while (x) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(x));
            x &= x - 1;
            const std::size_t v = wi * 64 + b;
            out.push_back(BitString::from_integer(Int(static_cast<unsigned long>(v)), lp));
        }
    }
    return out;
}

}  // namespace sliced
