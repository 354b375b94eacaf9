#include <array>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringgrp/abelianization.hpp"
#include "ringgrp/extension.hpp"
#include "ringgrp/homomorphism.hpp"
#include "ringgrp/rotations.hpp"
#include "ringgrp/todd_coxeter.hpp"
#include "ringgrp/verify.hpp"

namespace py = pybind11;
using namespace ringgrp;

namespace {

using Triple = std::array<double, 3>;

Vec3 vec(const Triple& t) { return {t[0], t[1], t[2]}; }

std::vector<Word> words(const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(Word::parse(t));
  return out;
}

std::vector<std::string> names(const std::vector<Generator>& gens) {
  std::vector<std::string> out;
  for (auto g : gens) out.push_back(g.name());
  return out;
}

std::tuple<double, double, double, double> components(const UnitQuaternion& q) {
  return {q.w(), q.x(), q.y(), q.z()};
}

py::dict motion_report(const MotionReport& r) {
  py::dict d;
  d["ok"] = r.ok();
  d["closes"] = r.closes;
  d["min_distance"] = r.min_distance;
  d["first_collision"] = r.first_collision ? py::cast(*r.first_collision) : py::none();
  d["first_discontinuity"] = r.first_discontinuity ? py::cast(*r.first_discontinuity) : py::none();
  d["failures"] = r.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ring groups of H-trivial links: words, presentations, coset enumeration and ring motions";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<UnknownGenerator>(m, "UnknownGenerator", error.ptr());
  py::register_exception<OutOfSpace>(m, "OutOfSpace", error.ptr());
  py::register_exception<NotEliminable>(m, "NotEliminable", error.ptr());

  py::class_<Presentation>(m, "Presentation")
      .def_static("parse", [](const std::string& text) { return parse_presentation(text); })
      .def_static("load", &load_presentation, py::arg("path"))
      .def_property_readonly("name", &Presentation::name)
      .def_property_readonly("generators", [](const Presentation& p) { return names(p.generators()); })
      .def_property_readonly("relators",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relators()) out.push_back(r.to_string());
                               return out;
                             })
      .def("serialize", [](const Presentation& p) { return serialize(p); })
      .def("simplify", [](const Presentation& p) { return simplify(p); })
      .def("eliminate", [](const Presentation& p, const std::string& g) { return tietze_eliminate(p, Generator(g)); })
      .def("__repr__", [](const Presentation& p) { return "<Presentation " + p.name() + ">"; });

  m.def(
      "normal_form",
      [](const Presentation& p, const std::string& word) {
        return normal_form(graph_product_spec(p), Word::parse(word)).to_string();
      },
      py::arg("group"), py::arg("word"), "Normal form of a word in a graph product given by commutator relators.");

  m.def(
      "abelianization",
      [](const Presentation& p) {
        AbelianInvariants inv = abelianization(p);
        std::vector<std::string> torsion;
        for (const auto& d : inv.torsion) torsion.push_back(d.str());
        return py::make_tuple(inv.free_rank, torsion, inv.to_string());
      },
      py::arg("group"), "(free rank, torsion coefficients as strings, printed form)");

  m.def(
      "coset_index",
      [](const Presentation& p, const std::vector<std::string>& subgroup, std::size_t max_cosets) {
        return enumerate(p, words(subgroup), max_cosets).num_cosets;
      },
      py::arg("group"), py::arg("subgroup") = std::vector<std::string>{}, py::arg("max_cosets") = kDefaultMaxCosets);

  m.def(
      "element_order",
      [](const Presentation& p, const std::string& word, std::size_t max_cosets) {
        return element_order(enumerate(p, {}, max_cosets), Word::parse(word));
      },
      py::arg("group"), py::arg("word"), py::arg("max_cosets") = kDefaultMaxCosets);

  m.def(
      "quotient_by",
      [](const Presentation& p, const std::vector<std::string>& killed) {
        std::vector<Generator> gens;
        for (const auto& k : killed) gens.emplace_back(k);
        return quotient_by(p, gens);
      },
      py::arg("group"), py::arg("killed"));

  m.def(
      "assemble_extension",
      [](const std::string& path, const std::string& name) { return assemble(load_extension(path), name); },
      py::arg("path"), py::arg("name") = "E");

  m.def(
      "check_hom",
      [](const std::string& path) {
        RelationCheck r = respects_relations(load_hom(path));
        return py::make_tuple(r.ok, r.counterexample ? py::cast(r.counterexample->to_string()) : py::none());
      },
      py::arg("path"), "(ok, first failing relator or None)");

  py::class_<RotationPath>(m, "RotationPath")
      .def_static(
          "about", [](const Triple& axis, double angle) { return RotationPath::about(vec(axis), angle); },
          py::arg("axis"), py::arg("angle"))
      .def_static("tau_H", &path_tau_H)
      .def_static("ell", &path_ell)
      .def_static("s", &path_s)
      .def(
          "then_space", [](const RotationPath& p, const Triple& axis, double angle) { return p.then_space(vec(axis), angle); },
          py::arg("axis"), py::arg("angle"))
      .def("reverse", [](const RotationPath& p) { return reverse(p); })
      .def("__mul__", [](const RotationPath& a, const RotationPath& b) { return concat(a, b); })
      .def("lift_endpoint", [](const RotationPath& p) { return components(lift_endpoint(p)); })
      .def("pi1_class", [](const RotationPath& p) { return pi1_class(p); });

  m.def(
      "ring_distance",
      [](const Triple& c1, double r1, const Triple& n1, const Triple& c2, double r2, const Triple& n2) {
        return ring_distance(make_ring(vec(c1), r1, vec(n1)), make_ring(vec(c2), r2, vec(n2)));
      },
      py::arg("center1"), py::arg("radius1"), py::arg("normal1"), py::arg("center2"), py::arg("radius2"),
      py::arg("normal2"));

  m.def("builtin_motion_names", &builtin_motion_names);
  m.def(
      "check_motion",
      [](const std::string& path) { return motion_report(validate_motion(load_motion(path))); }, py::arg("path"));
  m.def(
      "check_builtin_motion",
      [](const std::string& name) {
        RingMotion mot = builtin_motion(name);
        py::dict d = motion_report(validate_motion(mot));
        d["closure"] = mot.closure;
        d["samples"] = mot.samples.size();
        return d;
      },
      py::arg("name"));

  m.def(
      "rotation_number", [](const std::vector<double>& phi) { return rotation_number(NormalRingMotion{phi}); },
      py::arg("phi"));

  m.def(
      "verify_paper",
      [](const std::string& corpus_dir, const std::vector<std::string>& only) {
        SuiteOptions opts;
        opts.corpus_dir = corpus_dir;
        opts.only = only;
        py::list out;
        for (const auto& r : verify_paper(opts)) {
          py::dict d;
          d["id"] = r.id;
          d["status"] = std::string(to_string(r.status));
          d["details"] = r.details;
          d["anchor"] = r.anchor;
          out.append(d);
        }
        return out;
      },
      py::arg("corpus_dir"), py::arg("only") = std::vector<std::string>{});
  m.def("check_groups", &check_groups);
}
