#include "sliced/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "sliced/errors.hpp"

namespace sliced::gf {

namespace {

// Minimal-weight primitive polynomials over GF(2), one per degree.
// Index w holds the full mask including the x^w term.
constexpr std::uint64_t kPrimitive[33] = {
    0,          0,          0x7,         0xB,         0x13,       0x25,        0x43,       0x89,
    0x11D,      0x211,      0x409,       0x805,       0x1053,     0x201B,      0x4443,     0x8003,
    0x1100B,    0x20009,    0x40081,     0x80027,     0x100009,   0x200005,    0x400003,   0x800021,
    0x100001B,  0x2000009,  0x4000047,   0x8000027,   0x10000009, 0x20000005,  0x40000053, 0x80000009,
    0x1000000AF};

constexpr unsigned kTableWidthMax = 20;

}  // namespace

std::uint64_t primitive_poly(unsigned w) {
    if (w < 2 || w > 32) throw ParamError("primitive_poly: width must be in [2, 32]");
    return kPrimitive[w];
}

Field::Field(unsigned w) : w_(w) {
    if (w < 2 || w > 32) throw ParamError("gf::Field: width must be in [2, 32]");
    poly_ = static_cast<std::uint32_t>(kPrimitive[w] & ((w == 32) ? 0xffffffffull : ((1ull << w) - 1)));
    if (w <= kTableWidthMax) {
        const std::uint32_t q1 = order();
        exp_.assign(2ull * q1, 0);
        log_.assign(std::size_t(q1) + 1, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < q1; ++i) {
            exp_[i] = x;
            if (x == 1 && i != 0)
                throw Error("gf::Field: reduction polynomial is not primitive for width " + std::to_string(w));
            log_[x] = i;
            x = mul_noref(x, 2);
        }
        if (x != 1) throw Error("gf::Field: generator order mismatch for width " + std::to_string(w));
        for (std::uint32_t i = 0; i < q1; ++i) exp_[q1 + i] = exp_[i];
    }
}

std::uint32_t Field::mul_noref(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    const std::uint32_t high = 1u << (w_ - 1);
    const std::uint32_t mask = (w_ == 32) ? 0xffffffffu : ((1u << w_) - 1u);
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        const bool carry = a & high;
        a = (a << 1) & mask;
        if (carry) a ^= poly_;
    }
    return r;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[std::size_t(log_[a]) + log_[b]];
    return mul_noref(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, unsigned long long e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    if (!exp_.empty()) {
        const std::uint64_t le = (std::uint64_t(log_[a]) * (e % order())) % order();
        return exp_[le];
    }
    std::uint32_t r = 1;
    e %= order();
    while (e) {
        if (e & 1ull) r = mul_noref(r, a);
        a = mul_noref(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw ParamError("gf::Field: division by zero");
    if (!exp_.empty()) return exp_[order() - log_[a]];
    return pow(a, order() - 1);
}

std::uint32_t Field::alpha_pow(long long e) const {
    const long long q1 = order();
    long long r = e % q1;
    if (r < 0) r += q1;
    if (!exp_.empty()) return exp_[static_cast<std::size_t>(r)];
    return pow(2, static_cast<unsigned long long>(r));
}

const Field& field(unsigned w) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, std::make_unique<Field>(w)).first;
    return *it->second;
}

}  // namespace sliced::gf
