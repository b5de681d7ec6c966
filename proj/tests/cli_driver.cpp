// Exercises the installed CLI binary end to end: encode, corrupt, decode,
// exit codes, file determinism. Arguments: <cli-path> <scratch-dir>.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "sliced/del_code.hpp"
#include "sliced/subst_code.hpp"
#include "sliced/wordfile.hpp"

namespace fs = std::filesystem;
using namespace sliced;

namespace {

int checks = 0, failures = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << std::endl;
    }
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

int run(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_driver <cli-path> <scratch-dir>" << std::endl;
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const fs::path dir = argv[2];
    fs::create_directories(dir);

    const fs::path msg_in = dir / "msg.bin";
    const fs::path word = dir / "word.txt";
    const fs::path corrupted = dir / "corrupted.txt";
    const fs::path msg_out = dir / "decoded.bin";
    const fs::path log = dir / "stdout.txt";

    // deterministic input sized for the subst (4, 72, 1) parameters
    const SubstParams p = subst_params(4, 72, 1);
    std::mt19937_64 rng(0xc11);
    Message msg;
    msg.d1 = 1;
    {
        BitString d1bits(p.d1_packed_bits);
        for (std::size_t i = 0; i < d1bits.size(); ++i)
            if (rng() & 1ull) d1bits.set_bit(i, true);
        msg.d1 = d1bits.to_integer() + 1;
        msg.d2 = BitString(p.d2_bits);
        for (std::size_t i = 0; i < p.d2_bits; ++i)
            if (rng() & 1ull) msg.d2.set_bit(i, true);
    }
    write_message_bits(msg_in, pack_message(msg, p.d1_packed_bits, p.d2_bits));

    // encode prints the redundancy report as a single JSON object
    int rc = run(cli + " encode --mode subst --m 4 --l 72 --k 1 --in " + q(msg_in) + " --out " + q(word) +
                 " > " + q(log));
    expect(rc == 0, "encode exit code");
    const std::string rep = slurp(log);
    expect(rep.find("\"r_achieved_bits\"") != std::string::npos, "report mentions r_achieved_bits");
    expect(rep.find('\n') == rep.size() - 1, "report is a single line");

    // encode is deterministic
    const fs::path word2 = dir / "word2.txt";
    run(cli + " encode --mode subst --m 4 --l 72 --k 1 --in " + q(msg_in) + " --out " + q(word2) + " > /dev/null");
    expect(slurp(word) == slurp(word2), "byte-identical encode");

    // zero-error decode reproduces the input bytes
    rc = run(cli + " decode --in " + q(word) + " --out " + q(msg_out) + " > " + q(log));
    expect(rc == 0, "decode exit code");
    expect(slurp(msg_out) == slurp(msg_in), "bit-exact round trip");

    // corrupt with one substitution; sidecar records the pattern
    rc = run(cli + " corrupt --in " + q(word) + " --out " + q(corrupted) + " --subs 1 --seed 7 > " + q(log));
    expect(rc == 0, "corrupt exit code");
    expect(fs::exists(dir / "corrupted.txt.pattern.json"), "pattern sidecar written");
    {
        auto [h, w0] = read_word_file(word);
        auto [hc, wc] = read_word_file(corrupted);
        std::size_t diff = 0;
        for (unsigned i = 0; i < 4; ++i) diff += hamming_distance(w0.at(i), wc.at(i));
        expect(diff == 1, "exactly one character changed");
    }
    const fs::path corrupted2 = dir / "corrupted2.txt";
    run(cli + " corrupt --in " + q(word) + " --out " + q(corrupted2) + " --subs 1 --seed 7 > /dev/null");
    expect(slurp(corrupted) == slurp(corrupted2), "corrupt is seed-deterministic");

    rc = run(cli + " decode --in " + q(corrupted) + " --out " + q(msg_out) + " > " + q(log));
    expect(rc == 0, "decode after one substitution");
    expect(slurp(msg_out) == slurp(msg_in), "corrupted round trip is bit-exact");

    // shuffling the body lines must not change the decode result
    {
        auto [h, w0] = read_word_file(corrupted);
        std::ofstream out(dir / "shuffled.txt", std::ios::binary);
        out << "#sliced v1 mode=subst M=4 L=72 K=1 codec=none\n";
        for (std::size_t i = w0.size(); i-- > 0;) out << w0.at(i).str() << "\n";
    }
    rc = run(cli + " decode --in " + q(dir / "shuffled.txt") + " --out " + q(msg_out) + " > " + q(log));
    expect(rc == 0, "decode of shuffled file");
    expect(slurp(msg_out) == slurp(msg_in), "line order does not matter");

    // beyond the radius: exit 3 with a machine-readable reason, or a correct decode
    run(cli + " corrupt --in " + q(word) + " --out " + q(corrupted) + " --subs 2 --seed 99 2> /dev/null > " +
        q(log));
    rc = run(cli + " decode --in " + q(corrupted) + " --out " + q(msg_out) + " > " + q(log));
    expect(rc == 0 || rc == 3, "beyond-radius decode exits 0 or 3");
    if (rc == 3) expect(slurp(log).find("\"reason\"") != std::string::npos, "decode failure carries a reason");
    if (rc == 0) expect(slurp(msg_out) == slurp(msg_in), "beyond-radius success must be correct");

    // infeasible parameters: exit 1 naming the inequality
    rc = run(cli + " encode --mode subst --m 4 --l 71 --k 1 --in " + q(msg_in) + " --out " + q(word) + " 2> " +
             q(log) + " > /dev/null");
    expect(rc == 1, "infeasible parameters exit 1");
    expect(slurp(log).find("L' + 4KL' + 2K log2(4KL') <= L") != std::string::npos,
           "error names the violated inequality");

    // missing input: exit 2
    rc = run(cli + " decode --in " + q(dir / "absent.txt") + " --out " + q(msg_out) + " 2> /dev/null > /dev/null");
    expect(rc == 2, "missing file exits 2");

    // malformed header: exit 2
    {
        std::ofstream out(dir / "badheader.txt", std::ios::binary);
        out << "#sliced v1 mode=subst M=4 L=72 codec=none\n";
    }
    rc = run(cli + " decode --in " + q(dir / "badheader.txt") + " --out " + q(msg_out) +
             " 2> /dev/null > /dev/null");
    expect(rc == 2, "malformed header exits 2");

    // deletion mode end to end with one deletion
    const DelParams dp = del_params(4, 72, 1, "vt1");
    const fs::path dmsg = dir / "dmsg.bin";
    {
        BitString raw(dp.message_bits());
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (rng() & 1ull) raw.set_bit(i, true);
        write_message_bits(dmsg, raw);
    }
    rc = run(cli + " encode --mode del --m 4 --l 72 --k 1 --codec vt1 --in " + q(dmsg) + " --out " + q(word) +
             " > " + q(log));
    expect(rc == 0, "del encode");
    rc = run(cli + " corrupt --in " + q(word) + " --out " + q(corrupted) + " --dels 1 --seed 5 > " + q(log));
    expect(rc == 0, "del corrupt");
    {
        auto [h, wc] = read_word_file(corrupted);
        std::size_t shorter = 0;
        for (const auto& s : wc) shorter += s.size() == 71;
        expect(shorter == 1, "exactly one line shortened by one");
    }
    rc = run(cli + " decode --in " + q(corrupted) + " --out " + q(msg_out) + " > " + q(log));
    expect(rc == 0, "del decode");
    expect(slurp(msg_out) == slurp(dmsg), "deletion round trip is bit-exact");

    // env var overrides the seed
    rc = run("SLICED_SEED=7 " + cli + " corrupt --in " + q(word) + " --out " + q(dir / "env1.txt") +
             " --dels 1 --seed 12345 > /dev/null");
    expect(rc == 0, "env seed corrupt");
    run(cli + " corrupt --in " + q(word) + " --out " + q(dir / "env2.txt") + " --dels 1 --seed 7 > /dev/null");
    expect(slurp(dir / "env1.txt") == slurp(dir / "env2.txt"), "SLICED_SEED overrides --seed");

    // exact-domain index override for testing
    rc = run(cli + " encode --mode subst --m 4 --l 72 --k 1 --d1 42 --in " + q(msg_in) + " --out " + q(word) +
             " > /dev/null");
    expect(rc == 0, "encode with --d1");
    rc = run(cli + " decode --in " + q(word) + " --out " + q(msg_out) + " > /dev/null");
    expect(rc == 0, "decode of --d1 word");
    {
        const SubstParams sp = subst_params(4, 72, 1);
        const BitString bits = read_message_bits(msg_out, sp.message_bits());
        expect(unpack_message(bits, sp.d1_domain, sp.d1_packed_bits, sp.d2_bits).d1 == 42,
               "--d1 value round-trips");
    }

    std::cout << checks << " checks, " << failures << " failures" << std::endl;
    return failures == 0 ? 0 : 1;
}
