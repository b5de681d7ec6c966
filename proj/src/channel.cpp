#include "sliced/channel.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sliced/errors.hpp"

namespace sliced {

namespace {

// Selectors index the canonical order of the original word, so ops mutate a
// plain vector that is never re-sorted mid-pattern.
void apply_one(std::vector<BitString>& cur, const ErrorOp& op) {
    if (op.string_index >= cur.size()) throw ParamError("apply_pattern: string index out of range");
    BitString& s = cur[op.string_index];
    switch (op.kind) {
        case OpKind::Substitute:
            if (op.position < 1 || op.position > s.size()) throw ParamError("apply_pattern: position out of range");
            s.flip_bit(op.position - 1);
            break;
        case OpKind::Delete:
            if (op.position < 1 || op.position > s.size()) throw ParamError("apply_pattern: position out of range");
            s = s.erased(op.position - 1);
            break;
        case OpKind::Insert:
            if (op.position < 1 || op.position > s.size() + 1)
                throw ParamError("apply_pattern: position out of range");
            s = s.inserted(op.position - 1, op.bit);
            break;
    }
}

void enumerate_rec(std::vector<BitString>& cur, std::vector<ErrorOp>& ops, unsigned left, KindMask kinds,
                   std::vector<ErrorPattern>& out, std::size_t cap) {
    out.push_back(ErrorPattern{ops});
    if (out.size() > cap)
        throw ParamError("enumerate_patterns: pattern cap exceeded, use randomized sampling instead");
    if (left == 0) return;
    for (unsigned si = 0; si < cur.size(); ++si) {
        const std::size_t len = cur[si].size();
        if (kinds.substitute) {
            for (std::size_t p = 1; p <= len; ++p) {
                ops.push_back({OpKind::Substitute, si, p, false});
                cur[si].flip_bit(p - 1);
                enumerate_rec(cur, ops, left - 1, kinds, out, cap);
                cur[si].flip_bit(p - 1);
                ops.pop_back();
            }
        }
        if (kinds.del) {
            for (std::size_t p = 1; p <= len; ++p) {
                ops.push_back({OpKind::Delete, si, p, false});
                BitString saved = cur[si];
                cur[si] = saved.erased(p - 1);
                enumerate_rec(cur, ops, left - 1, kinds, out, cap);
                cur[si] = std::move(saved);
                ops.pop_back();
            }
        }
        if (kinds.insert) {
            for (std::size_t p = 1; p <= len + 1; ++p) {
                for (unsigned b = 0; b <= 1; ++b) {
                    ops.push_back({OpKind::Insert, si, p, b != 0});
                    BitString saved = cur[si];
                    cur[si] = saved.inserted(p - 1, b != 0);
                    enumerate_rec(cur, ops, left - 1, kinds, out, cap);
                    cur[si] = std::move(saved);
                    ops.pop_back();
                }
            }
        }
    }
}

ErrorOp random_op(OpKind kind, const std::vector<BitString>& cur, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> pick_string(0, static_cast<unsigned>(cur.size()) - 1);
    const unsigned si = pick_string(rng);
    const std::size_t len = cur[si].size();
    ErrorOp op;
    op.kind = kind;
    op.string_index = si;
    if (kind == OpKind::Insert) {
        op.position = std::uniform_int_distribution<std::size_t>(1, len + 1)(rng);
        op.bit = std::uniform_int_distribution<int>(0, 1)(rng) != 0;
    } else {
        if (len == 0) throw ParamError("random_pattern: cannot place an op on an empty string");
        op.position = std::uniform_int_distribution<std::size_t>(1, len)(rng);
    }
    return op;
}

}  // namespace

Word apply_pattern(const Word& w, const ErrorPattern& pattern) {
    std::vector<BitString> cur(w.begin(), w.end());
    for (const auto& op : pattern.ops) apply_one(cur, op);
    return Word(cur);
}

std::vector<ErrorPattern> enumerate_patterns(const Word& w, unsigned k, KindMask kinds, std::size_t cap) {
    std::vector<ErrorPattern> out;
    std::vector<BitString> cur(w.begin(), w.end());
    std::vector<ErrorOp> ops;
    enumerate_rec(cur, ops, k, kinds, out, cap);
    return out;
}

std::vector<Word> pattern_outcomes(const Word& w, unsigned k, KindMask kinds, std::size_t cap) {
    std::set<Word> outcomes;
    for (const auto& p : enumerate_patterns(w, k, kinds, cap)) outcomes.insert(apply_pattern(w, p));
    return {outcomes.begin(), outcomes.end()};
}

ErrorPattern random_pattern(const Word& w, unsigned k, KindMask kinds, std::uint64_t seed) {
    std::vector<OpKind> pool;
    if (kinds.substitute) pool.push_back(OpKind::Substitute);
    if (kinds.del) pool.push_back(OpKind::Delete);
    if (kinds.insert) pool.push_back(OpKind::Insert);
    if (pool.empty()) return {};
    std::mt19937_64 rng(seed);
    const unsigned count = std::uniform_int_distribution<unsigned>(0, k)(rng);
    ErrorPattern pattern;
    std::vector<BitString> cur(w.begin(), w.end());
    for (unsigned i = 0; i < count; ++i) {
        const OpKind kind = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        ErrorOp op = random_op(kind, cur, rng);
        pattern.ops.push_back(op);
        apply_one(cur, op);
    }
    return pattern;
}

ErrorPattern random_pattern_counts(const Word& w, unsigned subs, unsigned dels, unsigned ins,
                                   std::uint64_t seed) {
    std::vector<OpKind> kinds;
    kinds.insert(kinds.end(), subs, OpKind::Substitute);
    kinds.insert(kinds.end(), dels, OpKind::Delete);
    kinds.insert(kinds.end(), ins, OpKind::Insert);
    std::mt19937_64 rng(seed);
    std::shuffle(kinds.begin(), kinds.end(), rng);
    ErrorPattern pattern;
    std::vector<BitString> cur(w.begin(), w.end());
    for (const OpKind kind : kinds) {
        ErrorOp op = random_op(kind, cur, rng);
        pattern.ops.push_back(op);
        apply_one(cur, op);
    }
    return pattern;
}

}  // namespace sliced
