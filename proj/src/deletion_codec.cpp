#include "sliced/deletion_codec.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sliced/errors.hpp"

namespace sliced {

namespace {

unsigned ceil_log2(std::size_t x) {
    unsigned t = 0;
    while ((std::size_t(1) << t) < x) ++t;
    return t;
}

/// Systematic single-deletion codec over Varshamov-Tenengolts syndromes.
///
/// Container of N bits, t = ceil(log2(N+1)) syndrome positions at indices
/// 1, 2, 4, ..., 2^(t-1) (1-based), message bits at the remaining positions in
/// ascending order. The syndrome bits are chosen so that
/// sum_i i * c_i == 0 (mod N+1); the power-of-two weights reach every residue.
class VtCodec final : public DeletionCodec {
public:
    std::string id() const override { return "vt1"; }
    unsigned k() const override { return 1; }

    static unsigned syndrome_width(std::size_t n_container) {
        return n_container == 0 ? 0 : ceil_log2(n_container + 1);
    }

    std::size_t capacity(std::size_t container_len) const override {
        return container_len - syndrome_width(container_len);
    }

    std::size_t codeword_len(std::size_t msg_bits) const override {
        std::size_t n = msg_bits;
        while (capacity(n) < msg_bits) ++n;
        return n;
    }

    BitString encode(const BitString& msg, std::size_t container_len) const override {
        const unsigned t = syndrome_width(container_len);
        if (msg.size() != capacity(container_len))
            throw ParamError("vt1: message length differs from container capacity");
        const std::size_t mod = container_len + 1;
        BitString c(container_len);
        std::size_t s = 0, mi = 0;
        for (std::size_t pos = 1; pos <= container_len; ++pos) {
            if (is_power_of_two(pos) && pos < (std::size_t(1) << t)) continue;
            const bool b = msg.bit(mi++);
            if (b) {
                c.set_bit(pos - 1, true);
                s = (s + pos) % mod;
            }
        }
        std::size_t target = (mod - s % mod) % mod;
        for (unsigned j = 0; j < t; ++j) {
            if ((target >> j) & 1u) c.set_bit((std::size_t(1) << j) - 1, true);
        }
        return c;
    }

    BitString decode(const BitString& received, std::size_t container_len) const override {
        const std::size_t N = container_len;
        if (received.size() + 1 == N) return extract(correct_deletion(received, N), N);
        if (received.size() == N + 1) return extract(correct_insertion(received, N), N);
        if (received.size() == N) {
            if (syndrome(received, N) != 0) throw DecodeError("vt1: syndrome mismatch on full-length word");
            return extract(received, N);
        }
        throw DecodeError("vt1: received length outside the single-error range");
    }

private:
    static bool is_power_of_two(std::size_t x) { return (x & (x - 1)) == 0; }

    static std::size_t syndrome(const BitString& y, std::size_t N) {
        const std::size_t mod = N + 1;
        std::size_t s = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (y.bit(i)) s = (s + i + 1) % mod;
        return s;
    }

    // Insert one bit into y (length N-1) restoring syndrome 0 mod N+1.
    static BitString correct_deletion(const BitString& y, std::size_t N) {
        const std::size_t mod = N + 1;
        std::vector<std::size_t> suffix_ones(y.size() + 2, 0);
        for (std::size_t i = y.size(); i >= 1; --i)
            suffix_ones[i] = suffix_ones[i + 1] + (y.bit(i - 1) ? 1 : 0);
        const std::size_t s = syndrome(y, N);
        for (std::size_t p = 1; p <= N; ++p) {
            for (unsigned b = 0; b <= 1; ++b) {
                // Candidate: bit b inserted at position p; bits at p.. shift up by one.
                const std::size_t cand = (s + b * p + suffix_ones[p]) % mod;
                if (cand == 0) return y.inserted(p - 1, b != 0);
            }
        }
        throw DecodeError("vt1: no single-deletion correction restores the syndrome");
    }

    // Delete one bit from y (length N+1) restoring syndrome 0 mod N+1.
    static BitString correct_insertion(const BitString& y, std::size_t N) {
        const std::size_t mod = N + 1;
        std::vector<std::size_t> suffix_ones(y.size() + 2, 0);
        for (std::size_t i = y.size(); i >= 1; --i)
            suffix_ones[i] = suffix_ones[i + 1] + (y.bit(i - 1) ? 1 : 0);
        std::size_t s_full = 0;
        for (std::size_t i = 1; i <= y.size(); ++i)
            if (y.bit(i - 1)) s_full += i;
        for (std::size_t p = 1; p <= y.size(); ++p) {
            const std::size_t drop = (y.bit(p - 1) ? p : 0) + suffix_ones[p + 1];
            if ((s_full - drop) % mod == 0) return y.erased(p - 1);
        }
        throw DecodeError("vt1: no single-insertion correction restores the syndrome");
    }

    static BitString extract(const BitString& c, std::size_t N) {
        const unsigned t = syndrome_width(N);
        BitString msg;
        for (std::size_t pos = 1; pos <= N; ++pos) {
            if (is_power_of_two(pos) && pos < (std::size_t(1) << t)) continue;
            msg.append_bit(c.bit(pos - 1));
        }
        return msg;
    }
};

/// Pass-through codec for the error-free baseline.
class IdentityCodec final : public DeletionCodec {
public:
    std::string id() const override { return "identity"; }
    unsigned k() const override { return 0; }
    std::size_t capacity(std::size_t n) const override { return n; }
    std::size_t codeword_len(std::size_t n) const override { return n; }
    BitString encode(const BitString& msg, std::size_t n) const override {
        if (msg.size() != n) throw ParamError("identity: message length differs from container");
        return msg;
    }
    BitString decode(const BitString& rx, std::size_t n) const override {
        if (rx.size() != n) throw DecodeError("identity: length changed with no correction capability");
        return rx;
    }
};

/// Greedy-searched code for tiny message sizes; the contract partner for
/// radii the structured codecs do not cover. Codewords are selected in
/// ascending value order subject to pairwise disjoint radius-K deletion balls.
class BruteForceCodec final : public DeletionCodec {
public:
    BruteForceCodec(unsigned n, unsigned K) : n_(n), K_(K) {
        if (n_ > 8 || K_ > 3) throw ParamError("brute codec: search limited to n <= 8, K <= 3");
        const std::size_t need = std::size_t(1) << n_;
        for (unsigned N = std::max<unsigned>(n_, K_ + 1); N <= kMaxLen; ++N) {
            std::vector<BitString> picked;
            for (std::size_t v = 0; v < (std::size_t(1) << N) && picked.size() < need; ++v) {
                BitString cand = BitString::from_integer(Int(static_cast<unsigned long>(v)), N);
                bool ok = true;
                for (const auto& sel : picked)
                    if (lcs_length(cand, sel) + K_ >= N) {
                        ok = false;
                        break;
                    }
                if (ok) picked.push_back(std::move(cand));
            }
            if (picked.size() == need) {
                codebook_ = std::move(picked);
                N_ = N;
                return;
            }
        }
        throw ParamError("brute codec: no codebook found up to length " + std::to_string(kMaxLen));
    }

    std::string id() const override { return "brute" + std::to_string(n_) + "k" + std::to_string(K_); }
    unsigned k() const override { return K_; }

    std::size_t capacity(std::size_t container_len) const override {
        if (container_len != N_)
            throw ParamError(id() + ": only container length " + std::to_string(N_) + " is supported");
        return n_;
    }
    std::size_t codeword_len(std::size_t msg_bits) const override {
        if (msg_bits != n_) throw ParamError(id() + ": only message length " + std::to_string(n_) + " is supported");
        return N_;
    }

    BitString encode(const BitString& msg, std::size_t container_len) const override {
        if (container_len != N_ || msg.size() != n_) throw ParamError(id() + ": unsupported profile");
        return codebook_[msg.to_integer().get_ui()];
    }

    BitString decode(const BitString& rx, std::size_t container_len) const override {
        if (container_len != N_) throw ParamError(id() + ": unsupported profile");
        if (rx.size() + K_ < N_ || rx.size() > N_ + K_)
            throw DecodeError(id() + ": received length outside the error range");
        for (std::size_t v = 0; v < codebook_.size(); ++v)
            if (deletion_distance(codebook_[v], rx) <= K_)
                return BitString::from_integer(Int(static_cast<unsigned long>(v)), n_);
        throw DecodeError(id() + ": no codeword within deletion distance K");
    }

private:
    static constexpr unsigned kMaxLen = 18;
    unsigned n_, K_, N_ = 0;
    std::vector<BitString> codebook_;
};

}  // namespace

const DeletionCodec& deletion_codec(const std::string& id) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<DeletionCodec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it != cache.end()) return *it->second;

    std::unique_ptr<DeletionCodec> codec;
    if (id == "vt1") {
        codec = std::make_unique<VtCodec>();
    } else if (id == "identity") {
        codec = std::make_unique<IdentityCodec>();
    } else if (id.rfind("brute", 0) == 0) {
        const auto kpos = id.find('k', 5);
        if (kpos == std::string::npos) throw ParamError("unknown codec id: " + id);
        try {
            const unsigned n = static_cast<unsigned>(std::stoul(id.substr(5, kpos - 5)));
            const unsigned K = static_cast<unsigned>(std::stoul(id.substr(kpos + 1)));
            codec = std::make_unique<BruteForceCodec>(n, K);
        } catch (const std::invalid_argument&) {
            throw ParamError("unknown codec id: " + id);
        }
    } else {
        throw ParamError("unknown codec id: " + id);
    }
    return *cache.emplace(id, std::move(codec)).first->second;
}

std::size_t codec_overhead(const std::string& id, std::size_t n) { return deletion_codec(id).codeword_len(n); }

}  // namespace sliced
