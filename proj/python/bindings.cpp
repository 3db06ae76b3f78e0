#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "carpets/analysis.hpp"
#include "carpets/carpet.hpp"
#include "carpets/errors.hpp"
#include "carpets/finite_field.hpp"
#include "carpets/io.hpp"
#include "carpets/render.hpp"
#include "carpets/tiling.hpp"
#include "carpets/verify.hpp"

namespace py = pybind11;
using namespace carpets;

namespace {

py::array_t<Code> to_array(const Matrix& a) {
  py::array_t<Code> out({a.rows(), a.cols()});
  std::copy(a.codes().begin(), a.codes().end(), out.mutable_data());
  return out;
}

Matrix from_array(const FieldSpec& field, const py::array_t<Code, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw UsageError("expected a 2-d array");
  std::vector<Code> codes(a.data(), a.data() + a.size());
  return Matrix(field, a.shape(0), a.shape(1), std::move(codes));
}

CarpetParams params(const std::string& field, Code m, unsigned depth) {
  return CarpetParams(FieldSpec::parse(field), m, depth);
}

// Reports cross the boundary as JSON text; the Python side parses them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_carpets, m) {
  m.doc() = "Self-similar carpets over finite fields";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);

  py::class_<FieldSpec>(m, "Field")
      .def(py::init(&FieldSpec::parse), py::arg("descriptor"))
      .def_property_readonly("p", &FieldSpec::characteristic)
      .def_property_readonly("k", &FieldSpec::degree)
      .def_property_readonly("order", &FieldSpec::order)
      .def_property_readonly("modulus", [](const FieldSpec& f) {
        return std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end());
      })
      .def("descriptor", &FieldSpec::descriptor)
      .def("add", &FieldSpec::add)
      .def("sub", &FieldSpec::sub)
      .def("neg", &FieldSpec::neg)
      .def("mul", &FieldSpec::mul)
      .def("inv", &FieldSpec::inv)
      .def("pow", &FieldSpec::pow)
      .def("frobenius", &FieldSpec::frobenius)
      .def("degree_over_prime", &FieldSpec::degree_over_prime)
      .def("from_integer", &FieldSpec::from_integer)
      .def("digits", &FieldSpec::digits)
      .def("__repr__", [](const FieldSpec& f) { return "Field('" + f.descriptor() + "')"; });

  m.def("generate", [](const std::string& field, Code mm, unsigned depth, const std::string& method) {
    const CarpetParams p = params(field, mm, depth);
    if (method == "recurrence") return to_array(generate_recurrence(p).values);
    if (method == "tensor") return to_array(tensor_construction(p).values);
    throw UsageError("method must be 'recurrence' or 'tensor'");
  }, py::arg("field"), py::arg("m"), py::arg("depth"), py::arg("method") = "recurrence");

  m.def("fundamental_block", [](const std::string& field, Code mm) {
    return to_array(fundamental_block(FieldSpec::parse(field), mm));
  }, py::arg("field"), py::arg("m"));

  m.def("entry_at", [](const std::string& field, Code mm, unsigned depth, std::uint64_t i, std::uint64_t j) {
    return entry_at(params(field, mm, depth), i, j).code();
  }, py::arg("field"), py::arg("m"), py::arg("depth"), py::arg("i"), py::arg("j"));

  m.def("entries", [](const std::string& field, Code mm, unsigned depth, py::array_t<std::uint64_t> i,
                      py::array_t<std::uint64_t> j) {
    if (i.size() != j.size()) throw UsageError("index arrays differ in length");
    const EntryOracle oracle(params(field, mm, depth));
    py::array_t<Code> out(i.size());
    auto ri = i.unchecked<1>();
    auto rj = j.unchecked<1>();
    auto w = out.mutable_unchecked<1>();
    for (py::ssize_t k = 0; k < ri.shape(0); ++k) w(k) = oracle(ri(k), rj(k));
    return out;
  }, py::arg("field"), py::arg("m"), py::arg("depth"), py::arg("i"), py::arg("j"));

  m.def("closed_form_f", [](const std::string& field, std::uint64_t n, std::uint64_t k, Code mm) {
    const FieldSpec f = FieldSpec::parse(field);
    return closed_form_f(n, k, FieldElement(f, mm)).code();
  }, py::arg("field"), py::arg("n"), py::arg("k"), py::arg("m"));

  m.def("mirror", [](const std::string& field, const py::array_t<Code, py::array::c_style | py::array::forcecast>& a) {
    return to_array(mirror(from_array(FieldSpec::parse(field), a)));
  }, py::arg("field"), py::arg("matrix"));

  m.def("row_rescale_O", [](const std::string& field, Code mm) {
    return to_array(row_rescale_O(generate_recurrence(params(field, mm, 1))));
  }, py::arg("field"), py::arg("m"));

  m.def("_analysis_report", [](const std::string& field, Code mm, bool scan) {
    return dump(analysis_report(FieldSpec::parse(field), mm, scan));
  });
  m.def("_classify", [](const std::string& field, Code mm) {
    const FieldSpec f = FieldSpec::parse(field);
    return dump(symmetry_json(support(fundamental_block(f, mm)), f, mm));
  });
  m.def("_tiles", [](const std::string& field, Code mm) {
    return dump(tile_set_json(build_tile_set(FieldSpec::parse(field), mm)));
  });
  m.def("_verify", [](const std::string& check) {
    nlohmann::json out = nlohmann::json::array();
    if (check.empty()) {
      for (const auto& r : run_all(VerifyBounds{})) out.push_back(to_json(r));
    } else {
      out.push_back(to_json(run_check(check, VerifyBounds{})));
    }
    return dump(out);
  });

  m.def("scan", [](const std::string& field) { return scan_field(FieldSpec::parse(field)); }, py::arg("field"));
  m.def("has_zeros", [](const std::string& field, Code mm) { return has_zeros(FieldSpec::parse(field), mm); },
        py::arg("field"), py::arg("m"));
  m.def("central_sum_S", [](std::uint64_t n) { return central_sum_S(n).str(); }, py::arg("n"));
  m.def("delannoy", [](std::uint64_t n, std::uint64_t k) { return delannoy(n, k).str(); }, py::arg("n"), py::arg("k"));

  m.def("assemble", [](const std::string& field, Code mm, unsigned depth) {
    const Assembly a = assemble(build_tile_set(FieldSpec::parse(field), mm), depth);
    return py::make_tuple(to_array(a.colors), a.ambiguous.size());
  }, py::arg("field"), py::arg("m"), py::arg("depth"));
  m.def("aperiodicity_witness", [](const std::string& field, Code mm, unsigned d_max) {
    return aperiodicity_witness(FieldSpec::parse(field), mm, d_max);
  }, py::arg("field"), py::arg("m"), py::arg("d_max"));

  m.def("pbm", [](const std::string& field, Code mm, unsigned depth) {
    std::ostringstream out;
    write_pbm(out, stream_rows(params(field, mm, depth)));
    return py::bytes(out.str());
  }, py::arg("field"), py::arg("m"), py::arg("depth"));
  m.def("ppm", [](const std::string& field, Code mm, unsigned depth, bool symmetric) {
    const CarpetParams p = params(field, mm, depth);
    std::ostringstream out;
    write_ppm(out, stream_rows(p), default_palette(p.field, symmetric));
    return py::bytes(out.str());
  }, py::arg("field"), py::arg("m"), py::arg("depth"), py::arg("symmetric") = false);
}
