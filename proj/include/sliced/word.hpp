#pragma once

#include <cstddef>
#include <vector>

#include "sliced/bitstring.hpp"

namespace sliced {

/// Unordered set of distinct bit strings. Canonical order is descending
/// lexicographic; inserting a duplicate merges silently (set semantics).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<BitString> strings);

    void insert(BitString s);

    std::size_t size() const { return strings_.size(); }
    bool empty() const { return strings_.empty(); }
    /// i-th string in canonical (descending) order.
    const BitString& at(std::size_t i) const { return strings_[i]; }
    const std::vector<BitString>& strings() const { return strings_; }

    bool contains(const BitString& s) const;

    auto begin() const { return strings_.begin(); }
    auto end() const { return strings_.end(); }

    bool operator==(const Word& o) const { return strings_ == o.strings_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const { return strings_ < o.strings_; }

private:
    std::vector<BitString> strings_;  // sorted descending, unique
};

inline constexpr std::size_t kDefaultBallCap = 10'000'000;

/// All outcomes of flipping at most k bits across the word, as a set.
std::vector<Word> hamming_ball_word(const Word& w, unsigned k, std::size_t cap = kDefaultBallCap);

/// All outcomes of deleting at most k bits across the word, as a set.
std::vector<Word> deletion_ball_word(const Word& w, unsigned k, std::size_t cap = kDefaultBallCap);

/// Characteristic vector of a set of length-lp strings over all 2^lp values.
/// Bit v (0-based, MSB-first indexing) is set iff the value-v string is present.
BitString indicator_vector(const std::vector<BitString>& set, unsigned lp);
BitString indicator_vector(const Word& w, unsigned lp);

/// Support of an indicator vector, as length-lp strings in ascending value order.
std::vector<BitString> indicator_support(const BitString& indicator, unsigned lp);

}  // namespace sliced
