#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "qbalance/analysis.hpp"
#include "qbalance/balancing.hpp"
#include "qbalance/codec.hpp"
#include "qbalance/errors.hpp"
#include "qbalance/graycode.hpp"
#include "qbalance/params.hpp"
#include "qbalance/rational.hpp"
#include "qbalance/sequence.hpp"
#include "qbalance/version.hpp"

namespace py = pybind11;
using namespace qbalance;

namespace {

Sequence to_sequence(const std::vector<int>& symbols, int q) {
  std::vector<Symbol> raw;
  raw.reserve(symbols.size());
  for (int v : symbols) {
    if (v < 0 || v > 255) {
      throw AlphabetMismatch("symbol " + std::to_string(v) +
                             " outside [0, 255]");
    }
    raw.push_back(static_cast<Symbol>(v));
  }
  return Sequence(std::move(raw), q);
}

std::vector<int> to_ints(const Sequence& s) {
  return std::vector<int>(s.symbols().begin(), s.symbols().end());
}

py::object to_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.numerator(), r.denominator());
}

py::dict prefix_dict(const PrefixMapping& m) {
  py::dict out;
  out["g"] = to_ints(m.g);
  out["d"] = to_ints(m.d);
  out["zprime"] = m.zPrime;
  out["z"] = m.z;
  out["s"] = m.s;
  out["p"] = m.p;
  out["b"] = to_ints(m.b);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Balanced encoding of q-ary words using a rank-code prefix and a "
      "single filler symbol";
  m.attr("__version__") = std::string(kVersion);

  // Base classes first: translators run newest-first, so the most derived
  // exception types must be registered last to win the match.
  auto& excError = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto& excParameter =
      py::register_exception<ParameterError>(m, "ParameterError", excError);
  auto& excData = py::register_exception<DataError>(m, "DataError", excError);
  py::register_exception<PrefixOutOfSubset>(m, "PrefixOutOfSubset", excData);
  py::register_exception<NotBalanced>(m, "NotBalanced", excData);
  (void)excParameter;

  py::class_<Params>(m, "Params")
      .def_readonly("q", &Params::q)
      .def_readonly("k", &Params::k)
      .def_readonly("r_prime", &Params::rPrime)
      .def_readonly("n", &Params::n)
      .def_readonly("beta_n", &Params::betaN)
      .def_property_readonly(
          "beta_r", [](const Params& p) { return to_fraction(p.betaR); })
      .def_readonly("z1", &Params::z1)
      .def_readonly("z2", &Params::z2)
      .def("__repr__", [](const Params& p) {
        std::ostringstream os;
        os << "Params(q=" << p.q << ", k=" << p.k << ", r_prime=" << p.rPrime
           << ", n=" << p.n << ", beta_n=" << p.betaN << ", beta_r="
           << to_string(p.betaR) << ", z1=" << p.z1 << ", z2=" << p.z2 << ")";
        return os.str();
      });

  m.def("make_params", &make_params, py::arg("q"), py::arg("k"),
        "Derive prefix length, codeword length, target weight and rank "
        "window for an information length k over alphabet size q.");

  m.def(
      "encode",
      [](int q, std::int64_t k, const std::vector<int>& x) {
        Params p = make_params(q, k);
        return to_ints(encode(p, to_sequence(x, q)).flatten());
      },
      py::arg("q"), py::arg("k"), py::arg("x"),
      "Encode an information word into a balanced codeword u | g | y.");

  m.def(
      "decode",
      [](int q, std::int64_t k, const std::vector<int>& c, bool strict) {
        Params p = make_params(q, k);
        return to_ints(decode(p, to_sequence(c, q), strict));
      },
      py::arg("q"), py::arg("k"), py::arg("c"), py::arg("strict") = false,
      "Recover the information word; strict also verifies the weight.");

  m.def(
      "decode_trace",
      [](int q, std::int64_t k, const std::vector<int>& c) {
        Params p = make_params(q, k);
        DecodeTrace t = decode_trace(p, to_sequence(c, q));
        py::dict out;
        out["u"] = static_cast<int>(t.parts.u);
        out["prefix"] = prefix_dict(t.prefix);
        out["y"] = to_ints(t.parts.payload);
        out["x"] = to_ints(t.x);
        out["weight"] = t.weight;
        out["balanced"] = t.balanced;
        return out;
      },
      py::arg("q"), py::arg("k"), py::arg("c"),
      "Decode with every intermediate value exposed.");

  m.def(
      "gray_encode",
      [](int q, const std::vector<int>& d) {
        return to_ints(gray_encode(to_sequence(d, q)));
      },
      py::arg("q"), py::arg("d"),
      "Recode base-q digits into the one-symbol-per-step rank code.");

  m.def(
      "gray_decode",
      [](int q, const std::vector<int>& g) {
        return to_ints(gray_decode(to_sequence(g, q)));
      },
      py::arg("q"), py::arg("g"));

  m.def(
      "gray_unrank",
      [](int q, int rPrime, std::int64_t zPrime) {
        GrayWord w = gray_unrank(q, rPrime, zPrime);
        return py::make_tuple(to_ints(w.d), to_ints(w.g));
      },
      py::arg("q"), py::arg("r_prime"), py::arg("zprime"),
      "Digits and codeword at a rank, as a (d, g) tuple.");

  m.def(
      "gray_rank",
      [](int q, const std::vector<int>& g) {
        return gray_rank(to_sequence(g, q));
      },
      py::arg("q"), py::arg("g"));

  m.def(
      "balancing_sequence",
      [](int q, std::int64_t k, std::int64_t z) {
        return to_ints(balancing_sequence(q, k, z));
      },
      py::arg("q"), py::arg("k"), py::arg("z"),
      "The z-th offset word b_z.");

  m.def(
      "balance_candidates",
      [](int q, const std::vector<int>& x) {
        py::list out;
        for (const Candidate& c : balance_candidates(to_sequence(x, q))) {
          out.append(py::make_tuple(c.z, to_ints(c.y), c.weight));
        }
        return out;
      },
      py::arg("q"), py::arg("x"),
      "All kq candidates (z, y, weight) for a payload.");

  m.def(
      "select_subset",
      [](int q, std::int64_t k, int rPrime) {
        SubsetSpec s = select_subset(q, k, rPrime);
        py::dict out;
        out["z1"] = s.z1;
        out["z2"] = s.z2;
        out["mean"] = to_fraction(s.meanWeight);
        return out;
      },
      py::arg("q"), py::arg("k"), py::arg("r_prime"),
      "Rank window of width kq with its exact mean weight.");

  m.def(
      "scheme_kmax",
      [](const std::string& scheme, int q, int r) {
        SchemeBound b = scheme_kmax(scheme_from_id(scheme), q, r);
        py::dict out;
        out["scheme"] = std::string(scheme_id(b.scheme));
        out["q"] = b.q;
        out["r"] = b.r;
        out["exact"] = b.exact;
        out["kmax"] = b.exact ? py::cast(b.kmaxExact) : py::cast(b.kmaxApprox);
        return out;
      },
      py::arg("scheme"), py::arg("q"), py::arg("r"),
      "Largest information length servable with r redundant symbols.");

  m.def(
      "compare_csv",
      [](int q, int rMax) {
        std::ostringstream os;
        write_compare_csv(os, q, rMax);
        return os.str();
      },
      py::arg("q"), py::arg("rmax"),
      "CSV of capacity bounds for all supported schemes.");

  m.def(
      "encoding_table_tsv",
      [](int q, std::int64_t k, const std::vector<int>& x) {
        Params p = make_params(q, k);
        std::ostringstream os;
        write_encoding_table(os, p, to_sequence(x, q));
        return os.str();
      },
      py::arg("q"), py::arg("k"), py::arg("x"),
      "TSV of every candidate row for an information word.");

  m.def(
      "gray_table_tsv",
      [](int q, int rPrime) {
        std::ostringstream os;
        write_gray_table(os, q, rPrime);
        return os.str();
      },
      py::arg("q"), py::arg("r_prime"),
      "TSV of the full rank code.");

  m.def(
      "walk_csv",
      [](int q, const std::vector<int>& x) {
        std::ostringstream os;
        walk_trace(to_sequence(x, q)).write_csv(os);
        return os.str();
      },
      py::arg("q"), py::arg("x"),
      "CSV of (z, weight) over all candidates of a payload.");

  m.def("balanced_cardinality_approx", &balanced_cardinality_approx,
        py::arg("q"), py::arg("length"),
        "Approximate number of balanced words of a given length.");
}
