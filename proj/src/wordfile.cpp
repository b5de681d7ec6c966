#include "sliced/wordfile.hpp"

#include <fstream>
#include <sstream>

#include "sliced/errors.hpp"

namespace sliced {

void write_word_file(const std::filesystem::path& path, const WordFileHeader& header, const Word& w) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "#sliced v1 mode=" << header.mode << " M=" << header.M << " L=" << header.L
        << " K=" << header.K << " codec=" << header.codec << "\n";
    for (const auto& s : w) out << s.str() << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

std::pair<WordFileHeader, Word> read_word_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty word file: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();

    WordFileHeader h;
    std::istringstream hdr(line);
    std::string magic, tok;
    hdr >> magic >> tok;
    if (magic != "#sliced" || tok != "v1") throw IoError("malformed header: " + path.string());
    bool have_mode = false, have_m = false, have_l = false, have_k = false, have_codec = false;
    while (hdr >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw IoError("malformed header field: " + tok);
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
            if (key == "mode") {
                h.mode = val;
                have_mode = true;
            } else if (key == "M") {
                h.M = static_cast<unsigned>(std::stoul(val));
                have_m = true;
            } else if (key == "L") {
                h.L = std::stoul(val);
                have_l = true;
            } else if (key == "K") {
                h.K = static_cast<unsigned>(std::stoul(val));
                have_k = true;
            } else if (key == "codec") {
                h.codec = val;
                have_codec = true;
            } else {
                throw IoError("unknown header field: " + key);
            }
        } catch (const std::invalid_argument&) {
            throw IoError("malformed header value: " + tok);
        }
    }
    if (!(have_mode && have_m && have_l && have_k && have_codec))
        throw IoError("incomplete header: " + path.string());
    if (h.mode != "subst" && h.mode != "del") throw IoError("unknown mode: " + h.mode);

    std::vector<BitString> strings;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        strings.push_back(BitString::from_string(line));
    }
    return {h, Word(std::move(strings))};
}

Message unpack_message(const BitString& bits, const Int& d1_domain, std::size_t d1_packed_bits,
                       std::size_t d2_bits) {
    if (bits.size() < d1_packed_bits + d2_bits) throw ParamError("unpack_message: not enough bits");
    Message msg;
    msg.d1 = bits.prefix(d1_packed_bits).to_integer() + 1;
    if (msg.d1 > d1_domain) throw ParamError("unpack_message: d1 outside its domain");
    msg.d2 = bits.slice(d1_packed_bits, d2_bits);
    return msg;
}

BitString pack_message(const Message& msg, std::size_t d1_packed_bits, std::size_t d2_bits) {
    if (msg.d2.size() != d2_bits) throw ParamError("pack_message: d2 length mismatch");
    const Int v = msg.d1 - 1;
    if (bit_length(v) > d1_packed_bits)
        throw ParamError("pack_message: d1 does not fit the packed width of " +
                         std::to_string(d1_packed_bits) + " bits");
    BitString out = BitString::from_integer(v, d1_packed_bits);
    out.append(msg.d2);
    return out;
}

BitString read_message_bits(const std::filesystem::path& path, std::size_t nbits) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    const std::size_t nbytes = (nbits + 7) / 8;
    std::string buf(nbytes, '\0');
    in.read(buf.data(), static_cast<std::streamsize>(nbytes));
    if (static_cast<std::size_t>(in.gcount()) < nbytes)
        throw IoError("message file too short: need " + std::to_string(nbytes) + " bytes in " + path.string());
    BitString bits(nbits);
    for (std::size_t i = 0; i < nbits; ++i)
        if ((static_cast<unsigned char>(buf[i / 8]) >> (7 - (i % 8))) & 1u) bits.set_bit(i, true);
    return bits;
}

void write_message_bits(const std::filesystem::path& path, const BitString& bits) {
    const std::size_t nbytes = (bits.size() + 7) / 8;
    std::string buf(nbytes, '\0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.bit(i)) buf[i / 8] = static_cast<char>(static_cast<unsigned char>(buf[i / 8]) | (1u << (7 - (i % 8))));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(buf.data(), static_cast<std::streamsize>(nbytes));
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace sliced
