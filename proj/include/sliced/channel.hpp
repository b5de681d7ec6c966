#pragma once

#include <cstdint>
#include <vector>

#include "sliced/word.hpp"

namespace sliced {

enum class OpKind { Substitute, Delete, Insert };

/// One channel operation. string_index selects a string by its canonical
/// (descending) index in the word *before any op is applied*; position is
/// 1-based and must be valid for the string's length at application time.
struct ErrorOp {
    OpKind kind = OpKind::Substitute;
    unsigned string_index = 0;
    std::size_t position = 1;
    bool bit = false;  // inserted value; ignored for the other kinds
};

struct ErrorPattern {
    std::vector<ErrorOp> ops;
};

struct KindMask {
    bool substitute = false;
    bool del = false;
    bool insert = false;
};

/// Applies ops in order; the result merges duplicates (set semantics).
Word apply_pattern(const Word& w, const ErrorPattern& pattern);

/// Every pattern of at most k ops of the allowed kinds; the emitted set of
/// patterns reaches every outcome word reachable with <= k such ops.
/// Throws once more than cap patterns would be produced.
std::vector<ErrorPattern> enumerate_patterns(const Word& w, unsigned k, KindMask kinds,
                                             std::size_t cap = kDefaultBallCap);

/// Outcome words of enumerate_patterns, deduplicated.
std::vector<Word> pattern_outcomes(const Word& w, unsigned k, KindMask kinds,
                                   std::size_t cap = kDefaultBallCap);

/// Seed-deterministic pattern with a uniform op count in [0, k].
ErrorPattern random_pattern(const Word& w, unsigned k, KindMask kinds, std::uint64_t seed);

/// Seed-deterministic pattern with exactly the requested op counts, applied in
/// shuffled order.
ErrorPattern random_pattern_counts(const Word& w, unsigned subs, unsigned dels, unsigned ins,
                                   std::uint64_t seed);

}  // namespace sliced
