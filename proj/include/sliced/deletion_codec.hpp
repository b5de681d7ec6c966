#pragma once

#include <cstddef>
#include <string>

#include "sliced/bitstring.hpp"

namespace sliced {

/// Single-string codec correcting up to k() deletions (and, symmetrically, any
/// mix of deletions and insertions totalling k()). Codecs are sized by the
/// codeword container length so pipeline containers stay exact.
class DeletionCodec {
public:
    virtual ~DeletionCodec() = default;

    virtual std::string id() const = 0;
    virtual unsigned k() const = 0;

    /// Smallest container length whose capacity reaches msg_bits.
    virtual std::size_t codeword_len(std::size_t msg_bits) const = 0;
    /// Message bits carried by a container of the given length.
    virtual std::size_t capacity(std::size_t container_len) const = 0;

    /// msg must hold exactly capacity(container_len) bits.
    virtual BitString encode(const BitString& msg, std::size_t container_len) const = 0;
    /// received length must lie in [container_len - k, container_len + k] and be
    /// within deletion distance k of the codeword; throws DecodeError otherwise.
    virtual BitString decode(const BitString& received, std::size_t container_len) const = 0;
};

/// Registry lookup by id: "vt1", "identity", or "brute{n}k{K}" (e.g. "brute4k2").
/// Instances are cached; brute-force codecs build their codebook on first use.
const DeletionCodec& deletion_codec(const std::string& id);

/// Exact codeword length for a message of n bits ("codec overhead" query).
std::size_t codec_overhead(const std::string& id, std::size_t n);

}  // namespace sliced
