#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "sliced/del_code.hpp"
#include "sliced/subst_code.hpp"
#include "sliced/wordfile.hpp"

using namespace sliced;

// Committed fixtures pin the encodings bit-exactly across versions and
// platforms: re-encoding the golden message must reproduce the golden word
// file, and decoding it must reproduce the golden message bytes.

namespace {
const std::filesystem::path kGolden = std::filesystem::path(SLICED_TEST_DIR) / "golden";

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}
}  // namespace

TEST_CASE("substitution golden pair") {
    const SubstParams p = subst_params(4, 72, 1);
    const BitString bits = read_message_bits(kGolden / "subst_m4_l72_k1.msg", p.message_bits());
    const Message msg = unpack_message(bits, p.d1_domain, p.d1_packed_bits, p.d2_bits);

    auto [header, w] = read_word_file(kGolden / "subst_m4_l72_k1.word");
    CHECK(subst_encode(msg, p) == w);
    CHECK(subst_decode(w, p) == msg);

    const auto tmp = std::filesystem::temp_directory_path() / "sliced_golden_subst.word";
    write_word_file(tmp, header, w);
    CHECK(slurp(tmp) == slurp(kGolden / "subst_m4_l72_k1.word"));
    std::filesystem::remove(tmp);
}

TEST_CASE("deletion golden pair") {
    const DelParams p = del_params(4, 72, 1, "vt1");
    const BitString bits = read_message_bits(kGolden / "del_m4_l72_k1.msg", p.message_bits());
    const Message msg = unpack_message(bits, p.d1_domain, p.d1_packed_bits, p.d2_bits);

    auto [header, w] = read_word_file(kGolden / "del_m4_l72_k1.word");
    CHECK(header.codec == "vt1");
    CHECK(del_encode(msg, p) == w);
    CHECK(del_decode(w, p) == msg);
}
