#include <pybind11/iostream.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "sliced/channel.hpp"
#include "sliced/del_code.hpp"
#include "sliced/deletion_codec.hpp"
#include "sliced/deletion_index.hpp"
#include "sliced/errors.hpp"
#include "sliced/hamming_index.hpp"
#include "sliced/selftest.hpp"
#include "sliced/subst_code.hpp"

namespace py = pybind11;
using namespace sliced;

namespace {

Int int_from_py(const py::int_& v) {
    auto s = py::reinterpret_steal<py::object>(PyObject_Str(v.ptr()));
    if (!s) throw py::error_already_set();
    return Int(s.cast<std::string>());
}

py::int_ int_to_py(const Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

BitString bits_from_str(const std::string& s) { return BitString::from_string(s); }

std::vector<std::string> word_to_strings(const Word& w) {
    std::vector<std::string> out;
    for (const auto& s : w) out.push_back(s.str());
    return out;
}

Word word_from_strings(const std::vector<std::string>& strs) {
    std::vector<BitString> v;
    for (const auto& s : strs) v.push_back(bits_from_str(s));
    return Word(v);
}

py::dict subst_params_dict(const SubstParams& p) {
    py::dict d;
    d["mode"] = "subst";
    d["M"] = p.M;
    d["L"] = p.L;
    d["K"] = p.K;
    d["prefix_len"] = p.lp;
    d["ball_size"] = int_to_py(p.Q);
    d["d1_domain"] = int_to_py(p.d1_domain);
    d["d1_packed_bits"] = p.d1_packed_bits;
    d["d2_bits"] = p.d2_bits;
    d["message_bits"] = p.message_bits();
    d["indicator_parity_bits"] = p.indicator_parity_bits;
    d["tail_parity_bits"] = p.tail_parity_bits;
    return d;
}

py::dict del_params_dict(const DelParams& p) {
    py::dict d;
    d["mode"] = "del";
    d["M"] = p.M;
    d["L"] = p.L;
    d["K"] = p.K;
    d["codec"] = p.codec_id;
    d["prefix_len"] = p.lp;
    d["interference"] = int_to_py(p.P);
    d["d1_domain"] = int_to_py(p.d1_domain);
    d["d1_packed_bits"] = p.d1_packed_bits;
    d["d2_bits"] = p.d2_bits;
    d["message_bits"] = p.message_bits();
    d["alpha_rs"] = p.alpha_rs;
    d["payload_container"] = p.payload_container;
    return d;
}

py::dict report_dict(const RedundancyReport& r) {
    py::dict d;
    d["r_achieved_bits"] = r.r_achieved;
    d["log2_word_space"] = r.log2_word_space;
    d["log2_d1_domain"] = r.log2_d1_domain;
    d["d2_bits"] = r.d2_bits;
    d["bound_error_term"] = r.bound_error_term;
    d["bound_index_term"] = r.bound_index_term;
    d["codec_excess_bits"] = r.codec_excess_bits;
    return d;
}

}  // namespace

PYBIND11_MODULE(_sliced, m) {
    m.doc() = "Codec for unordered sets of bit strings under substitution or deletion/insertion errors";

    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_IOError);

    m.def("subst_params",
          [](unsigned M, std::size_t L, unsigned K) { return subst_params_dict(subst_params(M, L, K)); },
          py::arg("m"), py::arg("l"), py::arg("k"));

    m.def("del_params",
          [](unsigned M, std::size_t L, unsigned K, const std::string& codec) {
              return del_params_dict(del_params(M, L, K, codec));
          },
          py::arg("m"), py::arg("l"), py::arg("k"), py::arg("codec") = "vt1");

    m.def("subst_encode",
          [](unsigned M, std::size_t L, unsigned K, const py::int_& d1, const std::string& d2) {
              const SubstParams p = subst_params(M, L, K);
              return word_to_strings(subst_encode(Message{int_from_py(d1), bits_from_str(d2)}, p));
          },
          py::arg("m"), py::arg("l"), py::arg("k"), py::arg("d1"), py::arg("d2"));

    m.def("subst_decode",
          [](unsigned M, std::size_t L, unsigned K, const std::vector<std::string>& strings) {
              const SubstParams p = subst_params(M, L, K);
              const Message msg = subst_decode(word_from_strings(strings), p);
              return py::make_tuple(int_to_py(msg.d1), msg.d2.str());
          },
          py::arg("m"), py::arg("l"), py::arg("k"), py::arg("strings"));

    m.def("del_encode",
          [](unsigned M, std::size_t L, unsigned K, const std::string& codec, const py::int_& d1,
             const std::string& d2) {
              const DelParams p = del_params(M, L, K, codec);
              return word_to_strings(del_encode(Message{int_from_py(d1), bits_from_str(d2)}, p));
          },
          py::arg("m"), py::arg("l"), py::arg("k"), py::arg("codec"), py::arg("d1"), py::arg("d2"));

    m.def("del_decode",
          [](unsigned M, std::size_t L, unsigned K, const std::string& codec,
             const std::vector<std::string>& strings) {
              const DelParams p = del_params(M, L, K, codec);
              const Message msg = del_decode(word_from_strings(strings), p);
              return py::make_tuple(int_to_py(msg.d1), msg.d2.str());
          },
          py::arg("m"), py::arg("l"), py::arg("k"), py::arg("codec"), py::arg("strings"));

    m.def("redundancy_report",
          [](const std::string& mode, unsigned M, std::size_t L, unsigned K, const std::string& codec) {
              if (mode == "subst") return report_dict(subst_redundancy_report(subst_params(M, L, K)));
              return report_dict(del_redundancy_report(del_params(M, L, K, codec)));
          },
          py::arg("mode"), py::arg("m"), py::arg("l"), py::arg("k"), py::arg("codec") = "vt1");

    m.def("corrupt",
          [](const std::vector<std::string>& strings, unsigned subs, unsigned dels, unsigned ins,
             std::uint64_t seed) {
              const Word w = word_from_strings(strings);
              return word_to_strings(apply_pattern(w, random_pattern_counts(w, subs, dels, ins, seed)));
          },
          py::arg("strings"), py::arg("subs") = 0, py::arg("dels") = 0, py::arg("ins") = 0,
          py::arg("seed") = 1);

    m.def("hamming_index_encode",
          [](const py::int_& d, unsigned lp, unsigned M, unsigned K) {
              std::vector<std::string> out;
              for (const auto& e : hamming_index_encode(int_from_py(d), lp, M, K).entries)
                  out.push_back(e.str());
              return out;
          },
          py::arg("d"), py::arg("prefix_len"), py::arg("m"), py::arg("k"));

    m.def("hamming_index_decode",
          [](const std::vector<std::string>& entries, unsigned K) {
              std::vector<BitString> v;
              for (const auto& s : entries) v.push_back(bits_from_str(s));
              std::sort(v.begin(), v.end(), std::greater<>());
              const unsigned lp = static_cast<unsigned>(v.at(0).size());
              HammingCodebook book{v, lp, static_cast<unsigned>(v.size()), K};
              return int_to_py(hamming_index_decode(book));
          },
          py::arg("entries"), py::arg("k"));

    m.def("deletion_index_encode",
          [](const py::int_& d, unsigned lp, unsigned M, unsigned K) {
              std::vector<std::string> out;
              for (const auto& e : deletion_index_encode(int_from_py(d), lp, M, K).entries)
                  out.push_back(e.str());
              return out;
          },
          py::arg("d"), py::arg("prefix_len"), py::arg("m"), py::arg("k"));

    m.def("deletion_index_decode",
          [](const std::vector<std::string>& entries, unsigned K) {
              std::vector<BitString> v;
              for (const auto& s : entries) v.push_back(bits_from_str(s));
              std::sort(v.begin(), v.end(), std::greater<>());
              const unsigned lp = static_cast<unsigned>(v.at(0).size());
              DeletionCodebook book{v, lp, static_cast<unsigned>(v.size()), K};
              return int_to_py(deletion_index_decode(book));
          },
          py::arg("entries"), py::arg("k"));

    m.def("hamming_distance", [](const std::string& a, const std::string& b) {
        return hamming_distance(bits_from_str(a), bits_from_str(b));
    });
    m.def("deletion_distance", [](const std::string& a, const std::string& b) {
        return deletion_distance(bits_from_str(a), bits_from_str(b));
    });
    m.def("is_subsequence", [](const std::string& s, const std::string& c) {
        return is_subsequence(bits_from_str(s), bits_from_str(c));
    });
    m.def("codec_overhead", &codec_overhead, py::arg("codec"), py::arg("n"));

    m.def("selftest",
          [](const std::string& level) {
              py::scoped_ostream_redirect redirect;
              const auto results =
                  selftest::run(level == "full" ? selftest::Level::Full : selftest::Level::Quick, std::cout);
              return selftest::count_failures(results);
          },
          py::arg("level") = "quick");
}
