#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sliced/bigint.hpp"

namespace sliced {

/// Fixed-length binary string. Bit 0 is the most significant bit, so the
/// decimal value of equal-length strings agrees with lexicographic order.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitString from_string(std::string_view s);
    static BitString all_ones(std::size_t n);
    /// MSB-first value; v must fit in n bits.
    static BitString from_integer(const Int& v, std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool bit(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set_bit(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip_bit(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void append_bit(bool v) {
        if ((n_ & 63) == 0) w_.push_back(0);
        n_++;
        if (v) set_bit(n_ - 1, true);
    }
    void append(const BitString& other) {
        for (std::size_t i = 0; i < other.n_; ++i) append_bit(other.bit(i));
    }

    /// Bits [pos, pos+len).
    BitString slice(std::size_t pos, std::size_t len) const;
    BitString prefix(std::size_t len) const { return slice(0, len); }
    BitString suffix_from(std::size_t pos) const { return slice(pos, n_ - pos); }

    /// Copy with bit i removed / with v inserted before position i (i in [0, size]).
    BitString erased(std::size_t i) const;
    BitString inserted(std::size_t i, bool v) const;

    std::size_t weight() const;
    bool all_ones_string() const { return weight() == n_; }

    Int to_integer() const;
    std::string str() const;

    bool operator==(const BitString& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitString& o) const { return !(*this == o); }
    /// Lexicographic; a proper prefix sorts before its extensions.
    bool operator<(const BitString& o) const;
    bool operator>(const BitString& o) const { return o < *this; }

    std::size_t hash() const;

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitStringHash {
    std::size_t operator()(const BitString& b) const { return b.hash(); }
};

/// Number of differing positions; throws ParamError on length mismatch.
std::size_t hamming_distance(const BitString& a, const BitString& b);

/// Longest common subsequence length (O(|a|*|b|) dynamic program).
std::size_t lcs_length(const BitString& a, const BitString& b);

/// |a| + |b| - 2*LCS(a, b): minimal deletions in a and b to a common string.
std::size_t deletion_distance(const BitString& a, const BitString& b);

/// Greedy subsequence test, O(|c|).
bool is_subsequence(const BitString& s, const BitString& c);

/// All subsequences of c of length >= |c| - k, duplicates merged.
std::vector<BitString> deletion_ball_string(const BitString& c, unsigned k);

}  // namespace sliced
