#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sliced/channel.hpp"
#include "sliced/del_code.hpp"
#include "sliced/errors.hpp"
#include "sliced/selftest.hpp"
#include "sliced/subst_code.hpp"
#include "sliced/wordfile.hpp"

namespace {

using nlohmann::json;
using namespace sliced;

constexpr int kExitOk = 0;
constexpr int kExitParams = 1;
constexpr int kExitIo = 2;
constexpr int kExitDecode = 3;

json report_json(const RedundancyReport& r, const std::string& mode) {
    json j;
    j["mode"] = mode;
    j["r_achieved_bits"] = r.r_achieved;
    j["log2_word_space"] = r.log2_word_space;
    j["log2_d1_domain"] = r.log2_d1_domain;
    j["d2_bits"] = r.d2_bits;
    j["bound_error_term"] = r.bound_error_term;
    j["bound_index_term"] = r.bound_index_term;
    if (mode == "del") j["codec_excess_bits"] = r.codec_excess_bits;
    return j;
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("SLICED_SEED")) return std::stoull(env);
    return cli_seed;
}

int cmd_encode(const std::string& mode, unsigned M, std::size_t L, unsigned K, const std::string& codec,
               const std::string& in, const std::string& out, const std::optional<std::string>& d1_override) {
    Message msg;
    WordFileHeader header{mode, M, L, K, mode == "del" ? codec : "none"};
    Word w;
    json rep;
    if (mode == "subst") {
        const SubstParams p = subst_params(M, L, K);
        const BitString bits = read_message_bits(in, p.message_bits());
        msg = unpack_message(bits, p.d1_domain, p.d1_packed_bits, p.d2_bits);
        if (d1_override) msg.d1 = Int(*d1_override);
        w = subst_encode(msg, p);
        rep = report_json(subst_redundancy_report(p), mode);
    } else {
        const DelParams p = del_params(M, L, K, codec);
        const BitString bits = read_message_bits(in, p.message_bits());
        msg = unpack_message(bits, p.d1_domain, p.d1_packed_bits, p.d2_bits);
        if (d1_override) msg.d1 = Int(*d1_override);
        w = del_encode(msg, p);
        rep = report_json(del_redundancy_report(p), mode);
    }
    write_word_file(out, header, w);
    std::cout << rep.dump() << std::endl;
    return kExitOk;
}

int cmd_corrupt(const std::string& in, const std::string& out, unsigned subs, unsigned dels, unsigned ins,
                std::uint64_t seed) {
    auto [header, w] = read_word_file(in);
    if (subs + dels + ins > header.K)
        std::cerr << "warning: " << subs + dels + ins << " ops exceed the design radius K=" << header.K
                  << std::endl;
    const ErrorPattern pattern = random_pattern_counts(w, subs, dels, ins, effective_seed(seed));
    const Word corrupted = apply_pattern(w, pattern);
    write_word_file(out, header, corrupted);

    json ops = json::array();
    for (const auto& op : pattern.ops) {
        json o;
        o["kind"] = op.kind == OpKind::Substitute ? "substitute" : op.kind == OpKind::Delete ? "delete" : "insert";
        o["string"] = op.string_index;
        o["position"] = op.position;
        if (op.kind == OpKind::Insert) o["bit"] = op.bit ? 1 : 0;
        ops.push_back(o);
    }
    json sidecar;
    sidecar["seed"] = effective_seed(seed);
    sidecar["ops"] = ops;
    std::ofstream side(out + ".pattern.json", std::ios::binary);
    if (!side) throw IoError("cannot write pattern sidecar");
    side << sidecar.dump(2) << "\n";
    return kExitOk;
}

int cmd_decode(const std::string& in, const std::string& out) {
    auto [header, w] = read_word_file(in);
    Message msg;
    std::size_t d1_bits = 0, d2_bits = 0;
    if (header.mode == "subst") {
        const SubstParams p = subst_params(header.M, header.L, header.K);
        msg = subst_decode(w, p);
        d1_bits = p.d1_packed_bits;
        d2_bits = p.d2_bits;
    } else {
        const DelParams p = del_params(header.M, header.L, header.K, header.codec);
        msg = del_decode(w, p);
        d1_bits = p.d1_packed_bits;
        d2_bits = p.d2_bits;
    }
    BitString bits;
    try {
        bits = pack_message(msg, d1_bits, d2_bits);
    } catch (const ParamError&) {
        throw DecodeError("decoded index does not fit the packed message layout");
    }
    write_message_bits(out, bits);
    json ok;
    ok["status"] = "ok";
    std::cout << ok.dump() << std::endl;
    return kExitOk;
}

int cmd_selftest(const std::string& level) {
    const auto results = sliced::selftest::run(
        level == "full" ? selftest::Level::Full : selftest::Level::Quick, std::cout);
    return selftest::count_failures(results) == 0 ? kExitOk : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliced: codec for unordered sets of bit strings under substitution or deletion errors"};
    app.require_subcommand(1);

    std::string mode = "subst", codec = "vt1", in, out, d1_str, level = "quick";
    unsigned M = 4, K = 1;
    std::size_t L = 72;
    unsigned subs = 0, dels = 0, ins = 0;
    std::uint64_t seed = 1;

    auto* enc = app.add_subcommand("encode", "encode a message file into a word file");
    enc->add_option("--mode", mode)->check(CLI::IsMember({"subst", "del"}))->required();
    enc->add_option("--m", M, "number of strings per word")->required();
    enc->add_option("--l", L, "string length")->required();
    enc->add_option("--k", K, "error radius")->required();
    enc->add_option("--codec", codec, "single-string deletion codec id (del mode)");
    enc->add_option("--in", in)->required();
    enc->add_option("--out", out)->required();
    enc->add_option("--d1", d1_str, "override the index integer (testing)");

    auto* cor = app.add_subcommand("corrupt", "apply a reproducible error pattern to a word file");
    cor->add_option("--in", in)->required();
    cor->add_option("--out", out)->required();
    cor->add_option("--subs", subs);
    cor->add_option("--dels", dels);
    cor->add_option("--ins", ins);
    cor->add_option("--seed", seed);

    auto* dec = app.add_subcommand("decode", "decode a word file back into a message file");
    dec->add_option("--in", in)->required();
    dec->add_option("--out", out)->required();

    auto* st = app.add_subcommand("selftest", "run the verification suites");
    st->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed())
            return cmd_encode(mode, M, L, K, codec, in, out,
                              d1_str.empty() ? std::nullopt : std::make_optional(d1_str));
        if (cor->parsed()) return cmd_corrupt(in, out, subs, dels, ins, seed);
        if (dec->parsed()) return cmd_decode(in, out);
        if (st->parsed()) return cmd_selftest(level);
    } catch (const DecodeError& e) {
        nlohmann::json err;
        err["status"] = "error";
        err["reason"] = e.what();
        std::cout << err.dump() << std::endl;
        return kExitDecode;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << std::endl;
        return kExitIo;
    } catch (const ParamError& e) {
        std::cerr << "parameter error: " << e.what() << std::endl;
        return kExitParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitIo;
    }
    return kExitOk;
}
