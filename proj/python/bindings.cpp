#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phl/errors.hpp"
#include "phl/io.hpp"
#include "phl/nilpotent.hpp"
#include "phl/perverse.hpp"
#include "phl/render.hpp"
#include "phl/suite.hpp"

namespace py = pybind11;

namespace {

phl::GradedAlgebraModel model_from(const std::string& spec_json) {
  return phl::build_model(phl::model_spec_from_json(phl::parse_json(spec_json)));
}

phl::PerverseHodgeCube cube_from(const std::string& doc_json) {
  const phl::Json doc = phl::parse_json(doc_json);
  if (phl::is_cube_document(doc)) return phl::cube_from_json(doc);
  return phl::cube(phl::build_model(phl::model_spec_from_json(doc)));
}

phl::MatrixQ matrix_from(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  phl::MatrixQ m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw phl::DimensionMismatch("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = phl::Rational::parse(rows[r][c]);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_phl, m) {
  m.doc() = "Exact perverse-Hodge cube computations";

  py::register_exception<phl::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<phl::ModelError>(m, "ModelError", PyExc_RuntimeError);
  py::register_exception<phl::LefschetzError>(m, "LefschetzError", PyExc_RuntimeError);
  py::register_exception<phl::NotNilpotent>(m, "NotNilpotent", PyExc_ValueError);

  m.def("model_summary", [](const std::string& spec) { return phl::model_summary(model_from(spec)).dump(); },
        py::arg("spec_json"));
  m.def("cube", [](const std::string& doc) { return phl::cube_to_json(cube_from(doc)).dump(); }, py::arg("doc_json"),
        "Cube JSON for a model spec (or a cube document, normalized).");
  m.def(
      "render",
      [](const std::string& doc, const std::string& format) {
        const phl::PerverseHodgeCube c = cube_from(doc);
        if (format == "ascii") return phl::render_ascii(c);
        if (format == "tex") return phl::render_tex(c);
        throw std::invalid_argument("format must be ascii or tex");
      },
      py::arg("doc_json"), py::arg("format") = "ascii");
  m.def(
      "check",
      [](const std::string& doc_json) {
        const phl::Json doc = phl::parse_json(doc_json);
        const phl::CheckReport report = phl::is_cube_document(doc)
                                            ? phl::run_cube_suite(phl::cube_from_json(doc))
                                            : phl::run_check_suite(model_from(doc_json));
        return report.to_json().dump();
      },
      py::arg("doc_json"));
  m.def(
      "diamond_and_betti",
      [](const std::string& doc) {
        const phl::DiamondAndBetti db = phl::diamond_and_betti(cube_from(doc));
        std::vector<std::tuple<int, int, std::size_t>> hodge;
        for (const auto& [pq, h] : db.hodge) hodge.emplace_back(pq.first, pq.second, h);
        return py::make_tuple(hodge, db.betti);
      },
      py::arg("doc_json"));
  m.def(
      "weight_filtration",
      [](const std::vector<std::vector<std::string>>& rows) {
        const phl::NilpotentOperator n(matrix_from(rows));
        const phl::WeightFiltration w = phl::weight_filtration(n);
        return py::make_tuple(w.center, w.graded_dims, phl::verify_weight_axioms(n, w).passed);
      },
      py::arg("matrix"), "(center, graded dims, axioms hold) for a nilpotent matrix of rational strings.");
  m.def(
      "jordan_partition",
      [](const std::vector<std::vector<std::string>>& rows) {
        return phl::jordan_partition(phl::NilpotentOperator(matrix_from(rows)));
      },
      py::arg("matrix"));
}
