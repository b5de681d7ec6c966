#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "sliced/errors.hpp"
#include "sliced/subst_code.hpp"
#include "sliced/wordfile.hpp"

using namespace sliced;

namespace {
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("sliced_test_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_CASE("word file round trip and golden bytes") {
    TempDir tmp;
    const Word w({BitString::from_string("0011"), BitString::from_string("1100")});
    const WordFileHeader h{"subst", 2, 4, 1, "none"};
    const auto file = tmp.path / "w.txt";
    write_word_file(file, h, w);

    std::ifstream in(file, std::ios::binary);
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contents == "#sliced v1 mode=subst M=2 L=4 K=1 codec=none\n1100\n0011\n");

    auto [h2, w2] = read_word_file(file);
    CHECK(h2.mode == "subst");
    CHECK(h2.M == 2);
    CHECK(h2.L == 4);
    CHECK(h2.K == 1);
    CHECK(h2.codec == "none");
    CHECK(w2 == w);
}

TEST_CASE("reader ignores body order") {
    TempDir tmp;
    const auto file = tmp.path / "shuffled.txt";
    std::ofstream out(file, std::ios::binary);
    out << "#sliced v1 mode=subst M=2 L=4 K=1 codec=none\n0011\n1100\n";
    out.close();
    auto [h, w] = read_word_file(file);
    CHECK(w.at(0) == BitString::from_string("1100"));  // canonical order restored
}

TEST_CASE("malformed headers") {
    TempDir tmp;
    const auto file = tmp.path / "bad.txt";
    for (const char* header : {"#other v1 mode=subst M=2 L=4 K=1 codec=none", "#sliced v2 mode=subst",
                               "#sliced v1 mode=subst M=x L=4 K=1 codec=none",
                               "#sliced v1 mode=subst M=2 L=4 codec=none",
                               "#sliced v1 mode=weird M=2 L=4 K=1 codec=none"}) {
        std::ofstream out(file, std::ios::binary);
        out << header << "\n0011\n";
        out.close();
        CHECK_THROWS_AS(read_word_file(file), IoError);
    }
}

TEST_CASE("message packing") {
    const SubstParams p = subst_params(4, 72, 1);
    std::mt19937_64 rng(301);
    BitString raw(p.message_bits());
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (rng() & 1ull) raw.set_bit(i, true);
    const Message msg = unpack_message(raw, p.d1_domain, p.d1_packed_bits, p.d2_bits);
    CHECK(msg.d1 >= 1);
    CHECK(msg.d1 <= p.d1_domain);
    CHECK(pack_message(msg, p.d1_packed_bits, p.d2_bits) == raw);

    // an index too large for the packed width is reported
    Message big{pow2(p.d1_packed_bits) + 1, BitString(p.d2_bits)};
    CHECK_THROWS_AS(pack_message(big, p.d1_packed_bits, p.d2_bits), ParamError);
}

TEST_CASE("message files") {
    TempDir tmp;
    const auto file = tmp.path / "msg.bin";
    BitString bits(19);
    for (std::size_t i : {0ul, 3ul, 8ul, 18ul}) bits.set_bit(i, true);
    write_message_bits(file, bits);
    CHECK(std::filesystem::file_size(file) == 3);
    CHECK(read_message_bits(file, 19) == bits);
    CHECK_THROWS_AS(read_message_bits(file, 200), IoError);
    CHECK_THROWS_AS(read_message_bits(tmp.path / "absent.bin", 8), IoError);
}
