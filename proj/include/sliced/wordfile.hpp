#pragma once

#include <filesystem>
#include <string>

#include "sliced/message.hpp"
#include "sliced/word.hpp"

namespace sliced {

/// Plain-text container: one header line, then one line of '0'/'1' characters
/// per string. Lines are an unordered set; writers emit canonical descending
/// order so output is byte-stable, readers must not rely on order.
struct WordFileHeader {
    std::string mode;   // "subst" or "del"
    unsigned M = 0;
    std::size_t L = 0;
    unsigned K = 0;
    std::string codec;  // codec id or "none"
};

void write_word_file(const std::filesystem::path& path, const WordFileHeader& header, const Word& w);
std::pair<WordFileHeader, Word> read_word_file(const std::filesystem::path& path);

/// Message files are raw bytes, MSB-first within each byte. The first
/// d1_packed_bits bits (plus one) select d1, the next d2_bits bits are d2;
/// trailing bits of the final byte are zero padding.
Message unpack_message(const BitString& bits, const Int& d1_domain, std::size_t d1_packed_bits,
                       std::size_t d2_bits);
BitString pack_message(const Message& msg, std::size_t d1_packed_bits, std::size_t d2_bits);

BitString read_message_bits(const std::filesystem::path& path, std::size_t nbits);
void write_message_bits(const std::filesystem::path& path, const BitString& bits);

}  // namespace sliced
