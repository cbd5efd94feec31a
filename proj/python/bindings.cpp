/*
   Copyright 2026 The compcond Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Python bindings. Exact values cross the boundary as fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "compcond/analyzer.hpp"
#include "compcond/error.hpp"
#include "compcond/exact_linalg.hpp"
#include "compcond/fiedler.hpp"
#include "compcond/generalized.hpp"
#include "compcond/hessenberg.hpp"
#include "compcond/report.hpp"
#include "compcond/striped.hpp"
#include "compcond/verify.hpp"

namespace py = pybind11;
using namespace compcond;

namespace {

py::object fraction_type() {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls;
}

py::object to_py(const Rational& q) { return fraction_type()(py::str(to_string(q))); }

// ints, Fractions, Decimals and strings all go through their str() form.
Rational from_py(const py::handle& obj) {
    if (py::isinstance<py::float_>(obj)) return parse_rational(py::str(py::repr(obj)).cast<std::string>());
    return parse_rational(py::str(obj).cast<std::string>());
}

MonicPolynomial poly_from(const py::handle& coeffs) {
    if (py::isinstance<py::str>(coeffs)) return parse_polynomial_text(coeffs.cast<std::string>());
    std::vector<Rational> c;
    for (const py::handle& item : coeffs) c.push_back(from_py(item));
    if (c.empty()) throw Error(ErrorCode::DegreeTooSmall, "empty coefficient list");
    return MonicPolynomial(std::move(c));
}

py::list to_py(const std::vector<Rational>& values) {
    py::list out;
    for (const Rational& v : values) out.append(to_py(v));
    return out;
}

py::list matrix_to_py(const LabeledMatrix& m) {
    py::list rows;
    for (const std::vector<Rational>& row : m.value_rows()) rows.append(to_py(row));
    return rows;
}

LabeledMatrix matrix_from(const py::handle& rows) {
    std::vector<std::vector<Rational>> values;
    for (const py::handle& row : rows) {
        std::vector<Rational> r;
        for (const py::handle& item : row) r.push_back(from_py(item));
        values.push_back(std::move(r));
    }
    return LabeledMatrix::from_values(values);
}

py::dict report_to_py(const ConditionReport& r) {
    py::dict d;
    d["norm_sq"] = to_py(r.norm_sq);
    d["inv_norm_sq"] = to_py(r.inv_norm_sq);
    d["kappa_sq"] = to_py(r.kappa_sq);
    d["kappa_float"] = r.kappa_float;
    d["source"] = std::string(source_name(r.source));
    return d;
}

std::string run_analysis(const py::handle& poly, const std::optional<std::vector<std::string>>& families,
                         const std::optional<py::list>& a_grid, const std::optional<std::string>& ell_range,
                         const std::optional<std::string>& steps, const std::optional<std::vector<std::string>>& tuples,
                         const std::string& format) {
    AnalysisRequest req{poly_from(poly)};
    if (families) {
        req.families.clear();
        for (const std::string& f : *families) req.families.push_back(parse_family(f));
    }
    if (a_grid) {
        std::vector<Rational> grid;
        for (const py::handle& a : *a_grid) grid.push_back(from_py(a));
        req.a_grid = std::move(grid);
    }
    if (ell_range) req.ell_range = parse_index_range(*ell_range);
    if (steps) req.fiedler_steps = parse_index_range(*steps);
    if (tuples) {
        std::vector<StripeTuple> parsed;
        for (const std::string& t : *tuples) parsed.push_back(StripeTuple::parse(t));
        req.stripe_tuples = std::move(parsed);
    }
    req.format = parse_format(format);
    return emit_report(analyze(req), req.format);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact condition numbers of companion matrices";

    // The module owns the type; a bare handle avoids teardown-order trouble.
    static py::handle error_type = py::exception<Error>(m, "CompcondError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = error_type(e.what());
            inst.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    m.def("parse_polynomial", [](const std::string& text) { return to_py(parse_polynomial_text(text).coeffs()); },
          py::arg("text"), "Ascending c_0..c_{n-1} from JSON or a coefficient list.");

    m.def("char_poly", [](const py::handle& rows) { return to_py(char_poly(matrix_from(rows)).coeffs()); },
          py::arg("matrix"), "Non-leading coefficients of det(xI - A), ascending.");
    m.def("inverse", [](const py::handle& rows) { return matrix_to_py(invert(matrix_from(rows))); }, py::arg("matrix"));
    m.def("condition", [](const py::handle& rows) { return report_to_py(condition_report(matrix_from(rows))); },
          py::arg("matrix"), "Exact squared Frobenius condition number.");
    m.def("equivalent", [](const py::handle& a, const py::handle& b) { return equivalent(matrix_from(a), matrix_from(b)); },
          py::arg("a"), py::arg("b"), "Permutation similarity, possibly after transposition.");

    m.def("frobenius_matrix", [](const py::handle& c) { return matrix_to_py(build_frobenius(poly_from(c)).matrix()); },
          py::arg("coeffs"));
    m.def("fiedler_matrix",
          [](const py::handle& c, const std::vector<std::size_t>& sigma) {
              return matrix_to_py(fiedler_product(FiedlerPermutation(sigma), poly_from(c)));
          },
          py::arg("coeffs"), py::arg("sigma"));
    m.def("lattice_matrix",
          [](const py::handle& c, const std::string& path) {
              return matrix_to_py(lattice_to_hessenberg(LatticePath::parse(path), poly_from(c)).matrix());
          },
          py::arg("coeffs"), py::arg("path"));
    m.def("striped_matrix",
          [](const py::handle& c, const std::vector<std::size_t>& parts) {
              return matrix_to_py(build_striped(poly_from(c), StripeTuple{parts}).matrix());
          },
          py::arg("coeffs"), py::arg("parts"));
    m.def("generalized_matrix",
          [](const py::handle& c, const py::handle& a, std::size_t ell) {
              return matrix_to_py(build_M(poly_from(c), MSpec{from_py(a), ell}));
          },
          py::arg("coeffs"), py::arg("a"), py::arg("ell"));

    m.def("initial_step_size", [](const py::handle& rows) { return initial_step_size(matrix_from(rows)); },
          py::arg("matrix"));
    m.def("lattice_paths",
          [](std::size_t n) {
              std::vector<std::string> out;
              for (const LatticePath& p : all_lattice_paths(n)) out.push_back(p.to_string());
              return out;
          },
          py::arg("n"));
    m.def("stripe_tuples",
          [](std::size_t n) {
              std::vector<std::vector<std::size_t>> out;
              for (const StripeTuple& t : valid_stripe_tuples(n)) out.push_back(t.parts);
              return out;
          },
          py::arg("n"));

    m.def("kappa_fiedler_sq", [](const py::handle& c, std::size_t t) { return to_py(kappa_fiedler_sq(poly_from(c), t)); },
          py::arg("coeffs"), py::arg("t"));
    m.def("kappa_striped_sq",
          [](const py::handle& c, std::size_t k, std::size_t mm) { return to_py(kappa_striped_sq(poly_from(c), k, mm)); },
          py::arg("coeffs"), py::arg("k"), py::arg("m"));
    m.def("kappa_generalized_sq",
          [](const py::handle& c, const py::handle& a, std::size_t ell, const std::string& mode) {
              if (mode != "oracle" && mode != "printed") throw Error(ErrorCode::ParseError, "mode must be oracle or printed");
              return to_py(kappa_M_sq(poly_from(c), MSpec{from_py(a), ell},
                                      mode == "oracle" ? KappaMode::Oracle : KappaMode::Printed));
          },
          py::arg("coeffs"), py::arg("a"), py::arg("ell"), py::arg("mode") = "oracle");

    m.def("analyze", &run_analysis, py::arg("poly"), py::arg("families") = py::none(), py::arg("a_grid") = py::none(),
          py::arg("ell_range") = py::none(), py::arg("steps") = py::none(), py::arg("tuples") = py::none(),
          py::arg("format") = "json", "Serialized comparison of companion families.");

    m.def("verify",
          [](std::uint64_t seed, std::size_t n_max, std::size_t trials, std::size_t probes) {
              const VerifyReport r = verify_suite(seed, n_max, trials, probes);
              return py::make_tuple(r.all_passed(), r.to_text());
          },
          py::arg("seed"), py::arg("n_max") = 6, py::arg("trials") = 50, py::arg("probes") = 20,
          "Randomized property suite; returns (all_passed, text).");
}
