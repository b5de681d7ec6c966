#pragma once

#include <cstdint>
#include <vector>

namespace sliced::gf {

/// GF(2^w) in polynomial basis, generator alpha = x. Log/antilog tables are
/// built for w <= 20; wider fields fall back to shift-and-reduce multiply.
class Field {
public:
    explicit Field(unsigned w);

    unsigned width() const { return w_; }
    std::uint32_t order() const { return (w_ == 32) ? 0xffffffffu : ((1u << w_) - 1u); }  // q - 1
    std::uint32_t poly() const { return poly_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    /// alpha^e for any integer e (negative allowed).
    std::uint32_t alpha_pow(long long e) const;
    std::uint32_t pow(std::uint32_t a, unsigned long long e) const;

    bool has_tables() const { return !exp_.empty(); }

private:
    std::uint32_t mul_noref(std::uint32_t a, std::uint32_t b) const;

    unsigned w_;
    std::uint32_t poly_;  // reduction polynomial without the x^w term
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Cached field per symbol width; thread-safe, built once.
const Field& field(unsigned w);

/// Primitive polynomial for degree w in [2, 32], x^w term included, as a bit mask.
std::uint64_t primitive_poly(unsigned w);

}  // namespace sliced::gf
