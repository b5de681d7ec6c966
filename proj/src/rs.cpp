#include "sliced/rs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "sliced/errors.hpp"
#include "sliced/gf.hpp"

namespace sliced {

namespace {

using gf::Field;

// Walks set bits word by word, so sparse inputs (indicator vectors) pack in
// time proportional to their weight.
std::vector<std::uint32_t> pack_symbols(const BitString& bits, std::size_t offset, std::size_t n_bits,
                                        unsigned w, std::size_t n_symbols) {
    std::vector<std::uint32_t> syms(n_symbols, 0);
    const auto& words = bits.words();
    const std::size_t first_word = offset / 64;
    const std::size_t last_word = (offset + n_bits + 63) / 64;
    for (std::size_t wi = first_word; wi < last_word && wi < words.size(); ++wi) {
        std::uint64_t x = words[wi];
        while (x) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(x));
            x &= x - 1;
            const std::size_t g = wi * 64 + b;
            if (g < offset || g >= offset + n_bits) continue;
            const std::size_t i = g - offset;
            syms[i / w] |= 1u << (w - 1 - (i % w));
        }
    }
    return syms;
}

void unpack_symbols(const std::vector<std::uint32_t>& syms, unsigned w, std::size_t n_bits, BitString& out,
                    std::size_t offset) {
    for (std::size_t s = 0; s * w < n_bits; ++s) {
        if (syms[s] == 0) continue;
        const std::size_t upto = std::min<std::size_t>(w, n_bits - s * w);
        for (std::size_t j = 0; j < upto; ++j)
            if ((syms[s] >> (w - 1 - j)) & 1u) out.set_bit(offset + s * w + j, true);
    }
}

// g(x) = prod_{j=1..2k} (x - alpha^j), coefficients ascending, g[2k] = 1.
std::vector<std::uint32_t> generator_poly(const Field& f, unsigned k) {
    std::vector<std::uint32_t> g{1};
    for (unsigned j = 1; j <= 2 * k; ++j) {
        const std::uint32_t root = f.alpha_pow(j);
        std::vector<std::uint32_t> ng(g.size() + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            ng[i + 1] ^= g[i];
            ng[i] ^= f.mul(g[i], root);
        }
        g = std::move(ng);
    }
    return g;
}

// Parity symbols in transmission order for a systematic codeword
// (message symbols followed by parity symbols, descending powers of x).
std::vector<std::uint32_t> parity_symbols_dense(const Field& f, const std::vector<std::uint32_t>& msg,
                                                unsigned k) {
    const auto g = generator_poly(f, k);
    const std::size_t r = 2ull * k;
    std::vector<std::uint32_t> reg(r, 0);
    for (const std::uint32_t m : msg) {
        const std::uint32_t fb = m ^ reg[r - 1];
        for (std::size_t j = r - 1; j >= 1; --j) reg[j] = reg[j - 1] ^ f.mul(fb, g[j]);
        reg[0] = f.mul(fb, g[0]);
    }
    std::vector<std::uint32_t> out(r);
    for (std::size_t j = 0; j < r; ++j) out[j] = reg[r - 1 - j];
    return out;
}

// Polynomials of degree < 2k, coefficients ascending, reduced modulo the monic
// generator: x^{2k} == sum_j g[j] x^j.
struct ModGArith {
    const Field& f;
    const std::vector<std::uint32_t>& g;
    std::size_t r;  // 2k

    std::vector<std::uint32_t> mul_mod(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b) const {
        std::vector<std::uint32_t> t(2 * r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < r; ++j)
                if (b[j]) t[i + j] ^= f.mul(a[i], b[j]);
        }
        for (std::size_t i = 2 * r; i-- > r;) {
            const std::uint32_t c = t[i];
            if (c == 0) continue;
            t[i] = 0;
            for (std::size_t j = 0; j < r; ++j)
                if (g[j]) t[i - r + j] ^= f.mul(c, g[j]);
        }
        t.resize(r);
        return t;
    }

    std::vector<std::uint32_t> x_pow_mod(std::size_t e) const {
        std::vector<std::uint32_t> acc(r, 0);
        if (e < r) {
            acc[e] = 1;
            return acc;
        }
        std::vector<std::uint32_t> x(r, 0);
        x[1] = 1;
        acc[0] = 1;
        for (int bit = std::bit_width(static_cast<unsigned long long>(e)) - 1; bit >= 0; --bit) {
            acc = mul_mod(acc, acc);
            if ((e >> bit) & 1ull) acc = mul_mod(acc, x);
        }
        return acc;
    }
};

// Remainder as a weighted sum of x-power residues; pays off when the message
// has few nonzero symbols, as indicator vectors do.
std::vector<std::uint32_t> parity_symbols_sparse(const Field& f, const std::vector<std::uint32_t>& msg,
                                                 unsigned k) {
    const auto g = generator_poly(f, k);
    const std::size_t r = 2ull * k;
    const ModGArith arith{f, g, r};
    std::vector<std::uint32_t> acc(r, 0);
    const std::size_t n = msg.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (msg[i] == 0) continue;
        const auto pw = arith.x_pow_mod(n - 1 - i + r);
        for (std::size_t j = 0; j < r; ++j) acc[j] ^= f.mul(msg[i], pw[j]);
    }
    std::vector<std::uint32_t> out(r);
    for (std::size_t j = 0; j < r; ++j) out[j] = acc[r - 1 - j];
    return out;
}

std::vector<std::uint32_t> parity_symbols(const Field& f, const std::vector<std::uint32_t>& msg, unsigned k) {
    std::size_t nnz = 0;
    for (auto m : msg)
        if (m) ++nnz;
    // Sparse costs about nnz * 128 * 2k multiplies, dense about n * 2k.
    const std::size_t r = 2ull * k;
    if (nnz <= 64 && nnz * 128 * r < msg.size()) return parity_symbols_sparse(f, msg, k);
    return parity_symbols_dense(f, msg, k);
}

std::vector<std::uint32_t> syndromes(const Field& f, const std::vector<std::uint32_t>& code, unsigned k) {
    const std::size_t n = code.size();
    std::vector<std::uint32_t> s(2ull * k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (code[i] == 0) continue;
        const long long e = static_cast<long long>(n - 1 - i);
        for (unsigned j = 1; j <= 2 * k; ++j)
            s[j - 1] ^= f.mul(code[i], f.alpha_pow(e * j));
    }
    return s;
}

// Berlekamp-Massey; returns the error locator, coefficients ascending.
std::vector<std::uint32_t> berlekamp_massey(const Field& f, const std::vector<std::uint32_t>& s) {
    std::vector<std::uint32_t> lambda{1}, prev{1};
    unsigned L = 0, m = 1;
    std::uint32_t b = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::uint32_t delta = s[i];
        for (unsigned j = 1; j <= L && j < lambda.size(); ++j)
            if (j <= i) delta ^= f.mul(lambda[j], s[i - j]);
        if (delta == 0) {
            ++m;
            continue;
        }
        if (2 * L <= i) {
            auto tmp = lambda;
            const std::uint32_t coef = f.div(delta, b);
            if (lambda.size() < prev.size() + m) lambda.resize(prev.size() + m, 0);
            for (std::size_t j = 0; j < prev.size(); ++j) lambda[j + m] ^= f.mul(coef, prev[j]);
            L = static_cast<unsigned>(i + 1 - L);
            prev = std::move(tmp);
            b = delta;
            m = 1;
        } else {
            const std::uint32_t coef = f.div(delta, b);
            if (lambda.size() < prev.size() + m) lambda.resize(prev.size() + m, 0);
            for (std::size_t j = 0; j < prev.size(); ++j) lambda[j + m] ^= f.mul(coef, prev[j]);
            ++m;
        }
    }
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

std::uint32_t poly_eval(const Field& f, const std::vector<std::uint32_t>& p, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = f.mul(acc, x) ^ p[i];
    return acc;
}

}  // namespace

RsProfile rs_profile(std::size_t n_bits, unsigned k, std::size_t budget_bits) {
    if (n_bits < 1) throw ParamError("rs_profile: message must be nonempty");
    if (k < 1) throw ParamError("rs_profile: k must be at least 1");
    RsProfile p;
    p.n_bits = n_bits;
    p.k = k;
    unsigned w = 2;
    while (true) {
        if (w > 32) throw ParamError("rs_profile: no field width up to 32 fits the message");
        const unsigned long long q = 1ull << w;
        const std::size_t n_symbols = (n_bits + w - 1) / w;
        if ((q + 1) * w >= n_bits && n_symbols + 2ull * k <= q - 1) {
            p.w = w;
            p.n_symbols = n_symbols;
            break;
        }
        ++w;
    }
    p.budget_bits = budget_bits;
    if (budget_bits < p.parity_bits())
        throw ParamError("rs_profile: parity budget " + std::to_string(budget_bits) + " below 2k*w = " +
                         std::to_string(p.parity_bits()));
    return p;
}

BitString rs_redundancy(const BitString& msg, const RsProfile& p) {
    if (msg.size() != p.n_bits) throw ParamError("rs_redundancy: message length differs from profile");
    const Field& f = gf::field(p.w);
    const auto syms = pack_symbols(msg, 0, p.n_bits, p.w, p.n_symbols);
    const auto par = parity_symbols(f, syms, p.k);
    BitString out(p.budget_bits);
    unpack_symbols(par, p.w, p.parity_bits(), out, 0);
    return out;
}

BitString rs_correct(const BitString& received, const RsProfile& p) {
    if (received.size() != p.n_bits + p.budget_bits)
        throw ParamError("rs_correct: received length differs from profile");
    const Field& f = gf::field(p.w);
    auto code = pack_symbols(received, 0, p.n_bits, p.w, p.n_symbols);
    const auto par = pack_symbols(received, p.n_bits, p.parity_bits(), p.w, p.parity_symbols());
    code.insert(code.end(), par.begin(), par.end());

    const std::size_t n = code.size();
    auto s = syndromes(f, code, p.k);
    const bool clean = std::all_of(s.begin(), s.end(), [](std::uint32_t v) { return v == 0; });
    if (!clean) {
        const auto lambda = berlekamp_massey(f, s);
        const std::size_t nu = lambda.size() - 1;
        if (nu == 0 || nu > p.k) throw DecodeError("rs_correct: error count exceeds design distance");

        // omega = s(x) * lambda(x) mod x^{2k}
        std::vector<std::uint32_t> omega(2ull * p.k, 0);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < lambda.size() && i + j < omega.size(); ++j)
                omega[i + j] ^= f.mul(s[i], lambda[j]);
        while (!omega.empty() && omega.back() == 0) omega.pop_back();

        // lambda'(x): formal derivative; in characteristic 2 only odd terms survive.
        std::vector<std::uint32_t> dlambda(lambda.size() > 1 ? lambda.size() - 1 : 0, 0);
        for (std::size_t j = 1; j < lambda.size(); j += 2) dlambda[j - 1] = lambda[j];

        std::size_t found = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const long long e = static_cast<long long>(n - 1 - i);
            const std::uint32_t xinv = f.alpha_pow(-e);
            if (poly_eval(f, lambda, xinv) != 0) continue;
            const std::uint32_t num = poly_eval(f, omega, xinv);
            const std::uint32_t den = poly_eval(f, dlambda, xinv);
            if (den == 0) throw DecodeError("rs_correct: degenerate error locator");
            code[i] ^= f.div(num, den);
            ++found;
        }
        if (found != nu) throw DecodeError("rs_correct: error locator roots outside the codeword");
        const auto s2 = syndromes(f, code, p.k);
        if (!std::all_of(s2.begin(), s2.end(), [](std::uint32_t v) { return v == 0; }))
            throw DecodeError("rs_correct: residual syndrome after correction");
    }

    // Pad bits inside the last message symbol must stay zero.
    const std::size_t pad = p.n_symbols * p.w - p.n_bits;
    if (pad > 0 && (code[p.n_symbols - 1] & ((1u << pad) - 1u)) != 0)
        throw DecodeError("rs_correct: nonzero padding after correction");

    BitString out(p.n_bits);
    std::vector<std::uint32_t> msg(code.begin(), code.begin() + p.n_symbols);
    unpack_symbols(msg, p.w, p.n_bits, out, 0);
    return out;
}

}  // namespace sliced
