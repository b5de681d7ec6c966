#include "sliced/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sliced/errors.hpp"

namespace sliced {

BitString BitString::from_string(std::string_view s) {
    BitString b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            b.set_bit(i, true);
        else if (s[i] != '0')
            throw ParamError("bit string may contain only '0' and '1'");
    }
    return b;
}

BitString BitString::all_ones(std::size_t n) {
    BitString b(n);
    for (auto& w : b.w_) w = ~std::uint64_t(0);
    if (n & 63) b.w_.back() &= (std::uint64_t(1) << (n & 63)) - 1;
    return b;
}

BitString BitString::from_integer(const Int& v, std::size_t n) {
    if (sgn(v) < 0 || bit_length(v) > n)
        throw ParamError("integer does not fit in " + std::to_string(n) + " bits");
    BitString b(n);
    for (std::size_t i = 0; i < n; ++i)
        if (mpz_tstbit(v.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1 - i))) b.set_bit(i, true);
    return b;
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > n_) throw ParamError("slice out of range");
    BitString b(len);
    for (std::size_t i = 0; i < len; ++i)
        if (bit(pos + i)) b.set_bit(i, true);
    return b;
}

BitString BitString::erased(std::size_t i) const {
    BitString b(n_ - 1);
    for (std::size_t j = 0; j < n_ - 1; ++j)
        if (bit(j < i ? j : j + 1)) b.set_bit(j, true);
    return b;
}

BitString BitString::inserted(std::size_t i, bool v) const {
    if (i > n_) throw ParamError("insert position out of range");
    BitString b(n_ + 1);
    for (std::size_t j = 0; j < i; ++j)
        if (bit(j)) b.set_bit(j, true);
    if (v) b.set_bit(i, true);
    for (std::size_t j = i; j < n_; ++j)
        if (bit(j)) b.set_bit(j + 1, true);
    return b;
}

std::size_t BitString::weight() const {
    std::size_t w = 0;
    for (auto x : w_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

Int BitString::to_integer() const {
    Int v = 0;
    for (std::size_t base = 0; base < n_; base += 64) {
        const std::size_t len = std::min<std::size_t>(64, n_ - base);
        std::uint64_t chunk = 0;
        for (std::size_t t = 0; t < len; ++t) chunk = (chunk << 1) | std::uint64_t(bit(base + t));
        v <<= static_cast<unsigned long>(len);
        v += Int(static_cast<unsigned long>(chunk));
    }
    return v;
}

std::string BitString::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

bool BitString::operator<(const BitString& o) const {
    const std::size_t m = std::min(n_, o.n_);
    for (std::size_t i = 0; i < m; ++i) {
        const bool x = bit(i), y = o.bit(i);
        if (x != y) return y;  // 0 < 1
    }
    return n_ < o.n_;
}

std::size_t BitString::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto x : w_) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw ParamError("hamming_distance: length mismatch");
    std::size_t d = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
    return d;
}

std::size_t lcs_length(const BitString& a, const BitString& b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const bool ai = a.bit(i - 1);
        for (std::size_t j = 1; j <= m; ++j) {
            if (ai == b.bit(j - 1))
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::size_t deletion_distance(const BitString& a, const BitString& b) {
    return a.size() + b.size() - 2 * lcs_length(a, b);
}

bool is_subsequence(const BitString& s, const BitString& c) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < c.size() && i < s.size(); ++j)
        if (c.bit(j) == s.bit(i)) ++i;
    return i == s.size();
}

namespace {
void enumerate_deletions(const BitString& c, unsigned k, std::size_t from, std::set<BitString>& out) {
    out.insert(c);
    if (k == 0) return;
    for (std::size_t i = from; i < c.size(); ++i) enumerate_deletions(c.erased(i), k - 1, i, out);
}
}  // namespace

std::vector<BitString> deletion_ball_string(const BitString& c, unsigned k) {
    if (k > c.size()) throw ParamError("deletion_ball_string: k exceeds string length");
    std::set<BitString> out;
    enumerate_deletions(c, k, 0, out);
    return {out.begin(), out.end()};
}

}  // namespace sliced
