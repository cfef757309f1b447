#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bouquet/bouquet.hpp"
#include "bouquet/braid.hpp"
#include "bouquet/cyclepres.hpp"
#include "bouquet/io.hpp"
#include "bouquet/moves.hpp"

namespace py = pybind11;
using namespace bouquet;

namespace {

std::vector<int> resolve(const CurveSystem& s, const std::vector<std::string>& names) {
  std::vector<int> out;
  if (names.empty()) {
    for (int c = 0; c < s.curve_count(); ++c) out.push_back(c);
    return out;
  }
  for (const auto& n : names) out.push_back(s.curve(n));
  return out;
}

std::vector<std::string> names_of(const CurveSystem& s, const std::vector<int>& curves) {
  std::vector<std::string> out;
  for (int c : curves) out.push_back(s.name(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braids, cycle presentations and bouquets of curves";

  py::register_exception<MoveRefused>(m, "MoveRefused", PyExc_ValueError);
  py::register_exception<InvalidSystem>(m, "InvalidSystem", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  // ---- braids
  m.def(
      "braid_normal_form",
      [](const std::string& word, int strands) {
        const auto nf = normal_form(BraidWord::parse(word, strands));
        return py::make_tuple(nf.inf, nf.str(), nf.to_letters());
      },
      py::arg("word"), py::arg("strands") = -1,
      "Garside normal form as (inf, text, letters).");
  m.def(
      "braid_equal",
      [](const std::string& w1, const std::string& w2, int strands) {
        auto a = BraidWord::parse(w1, strands), b = BraidWord::parse(w2, strands);
        const int k = std::max(a.strands(), b.strands());
        auto widen = [k](const BraidWord& w) { return BraidWord(k, std::vector<int>(w.letters().begin(), w.letters().end())); };
        return equals(widen(a), widen(b));
      },
      py::arg("w1"), py::arg("w2"), py::arg("strands") = -1);

  // ---- cycle presentation
  m.def(
      "twist_word_equal",
      [](int n, const std::string& w1, const std::string& w2) {
        return twist_word_equals(n, parse_twist_word(w1, n), parse_twist_word(w2, n));
      },
      py::arg("n"), py::arg("w1"), py::arg("w2"), "Equality of twist words through the braid embedding.");
  m.def(
      "verify_presentation",
      [](int n) {
        int bad = 0;
        for (const auto& r : verify_relators(n)) bad += !r.ok;
        for (const auto& r : round_trip(n)) bad += !r.ok;
        return bad == 0;
      },
      py::arg("n"));

  // ---- curve systems
  py::class_<SurfaceInfo>(m, "SurfaceInfo")
      .def_readonly("vertices", &SurfaceInfo::vertices)
      .def_readonly("edges", &SurfaceInfo::edges)
      .def_readonly("faces", &SurfaceInfo::faces)
      .def_readonly("euler", &SurfaceInfo::euler)
      .def_readonly("genus", &SurfaceInfo::genus)
      .def_readonly("punctures", &SurfaceInfo::punctures);

  py::class_<CurveSystem>(m, "CurveSystem")
      .def_static("parse", [](const std::string& text) { return parse_system(text); })
      .def_static("bouquet", &build_bouquet, py::arg("n"))
      .def_static("chain", &build_chain, py::arg("n"))
      .def("serialize", &serialize_system)
      .def_property_readonly("names", &CurveSystem::curve_names)
      .def("surface", &CurveSystem::surface)
      .def(
          "intersection",
          [](const CurveSystem& s, const std::string& a, const std::string& b) {
            return intersection_number(s, s.curve(a), s.curve(b)).count;
          },
          py::arg("a"), py::arg("b"))
      .def(
          "isotopic",
          [](const CurveSystem& s, const std::string& a, const std::string& b) {
            return isotopic(s, s.curve(a), s.curve(b)).isotopic;
          },
          py::arg("a"), py::arg("b"))
      .def(
          "twist",
          [](const CurveSystem& s, const std::string& target, const std::string& along, int power) {
            return dehn_twist(s, s.curve(target), s.curve(along), power);
          },
          py::arg("target"), py::arg("along"), py::arg("power") = 1, "T_along^power applied to one curve.")
      .def("reduce", [](const CurveSystem& s) { return reduce_all(s).system; })
      .def("__repr__", [](const CurveSystem& s) {
        return "<CurveSystem curves=" + std::to_string(s.curve_count()) +
               " crossings=" + std::to_string(s.crossing_count()) + ">";
      });

  // ---- bouquets
  py::class_<BouquetCertificate>(m, "Certificate")
      .def_readonly("yes", &BouquetCertificate::yes)
      .def_readonly("detail", &BouquetCertificate::detail)
      .def_readonly("notes", &BouquetCertificate::notes)
      .def_property_readonly("reason", [](const BouquetCertificate& c) { return failure_text(c.failure); })
      .def("__bool__", [](const BouquetCertificate& c) { return c.yes; });

  m.def(
      "detect_bouquet",
      [](const CurveSystem& s, const std::vector<std::string>& curves) {
        auto cert = detect_bouquet(s, resolve(s, curves));
        return py::make_tuple(cert, names_of(s, cert.order));
      },
      py::arg("system"), py::arg("curves") = std::vector<std::string>{},
      "Decision with certificate; returns (certificate, cyclic order of names).");
  m.def(
      "linear_criterion",
      [](const CurveSystem& s, const std::vector<std::string>& order) {
        return check_linear_criterion(s, resolve(s, order)).yes;
      },
      py::arg("system"), py::arg("order"));
  m.def(
      "bouquet_to_chain",
      [](const CurveSystem& s, const std::vector<std::string>& curves) {
        auto cert = detect_bouquet(s, resolve(s, curves));
        return bouquet_to_chain(s, cert);
      },
      py::arg("system"), py::arg("curves") = std::vector<std::string>{});
}
