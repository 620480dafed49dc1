#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcsk/builtins.hpp"
#include "lcsk/current.hpp"
#include "lcsk/errors.hpp"
#include "lcsk/runner.hpp"
#include "lcsk/solvers.hpp"
#include "lcsk/specfile.hpp"

namespace py = pybind11;
using namespace lcsk;

namespace {

// Opaque handle; the Python surface works with names, dimensions and rendered
// strings — exact objects stay on the C++ side.
struct PyAlgebra {
    AlgebraPtr alg;
};

RunOptions make_options(int deg_d, int deg_l, int tensor, const std::string& format,
                        const std::string& convention) {
    RunOptions opts;
    if (deg_d >= 0) opts.deg_d = deg_d;
    if (deg_l >= 0) opts.deg_l = deg_l;
    if (tensor >= 1) opts.tensor = tensor;
    if (convention == "shifted") opts.conv = Convention::LambdaShifted;
    else if (convention != "partial") throw UsageError("unknown convention '" + convention + "'");
    if (format == "machine") opts.format = ReportFormat::Machine;
    else if (format != "text") throw UsageError("unknown format '" + format + "'");
    return opts;
}

} // namespace

PYBIND11_MODULE(_lcsk, m) {
    m.doc() = "exact kernel for finite-rank Lie conformal superalgebras";
    m.attr("__version__") = kToolVersion;

    py::class_<PyAlgebra>(m, "Algebra")
        .def_static("virasoro", [] { return PyAlgebra{virasoro()}; })
        .def_static("neveu_schwarz", [] { return PyAlgebra{neveu_schwarz()}; })
        .def_static("cur_sl2", [] { return PyAlgebra{cur_sl2()}; })
        .def_static("abelian", [](int rank) { return PyAlgebra{abelian(rank)}; },
                    py::arg("rank"))
        .def_static(
            "from_spec_text",
            [](const std::string& text) { return PyAlgebra{build_algebra(parse_spec(text))}; },
            py::arg("text"))
        .def_property_readonly("rank", [](const PyAlgebra& a) { return a.alg->rank(); })
        .def_property_readonly("name", [](const PyAlgebra& a) { return a.alg->name(); })
        .def("generator_names",
             [](const PyAlgebra& a) {
                 std::vector<std::string> names;
                 for (int i = 0; i < a.alg->rank(); ++i) names.push_back(a.alg->gen_name(i));
                 return names;
             })
        .def("bracket",
             [](const PyAlgebra& a, int i, int j) {
                 if (i < 0 || j < 0 || i >= a.alg->rank() || j >= a.alg->rank())
                     throw UsageError("generator index out of range");
                 return bracket(ConformalElement::generator(a.alg, i),
                                ConformalElement::generator(a.alg, j),
                                a.alg->lambda())
                     .str();
             },
             py::arg("i"), py::arg("j"))
        .def("check_skew", [](const PyAlgebra& a) { return check_skew(a.alg).passed; })
        .def("check_jacobi", [](const PyAlgebra& a) { return check_jacobi(a.alg).passed; })
        .def("is_perfect",
             [](const PyAlgebra& a, int deg_d) { return is_perfect(a.alg, deg_d).perfect; },
             py::arg("deg_d") = 3)
        .def("center_dim",
             [](const PyAlgebra& a, int deg_d) { return center(a.alg, deg_d).dim(); },
             py::arg("deg_d") = 3)
        .def("centroid_dims",
             [](const PyAlgebra& a, int deg_d) {
                 CentroidBasis cb = solve_centroid(a.alg, deg_d);
                 return std::pair<int, int>(static_cast<int>(cb.even.size()),
                                            static_cast<int>(cb.odd.size()));
             },
             py::arg("deg_d") = 3)
        .def("bider_dims",
             [](const PyAlgebra& a, int deg_d, int deg_l) {
                 BiderBasis bb = solve_biderivations(a.alg, deg_d, deg_l);
                 return std::pair<int, int>(static_cast<int>(bb.even.size()),
                                            static_cast<int>(bb.odd.size()));
             },
             py::arg("deg_d") = 3, py::arg("deg_l") = 3)
        .def("commuting_dim",
             [](const PyAlgebra& a, int deg_d) {
                 return solve_commuting(a.alg, deg_d).dim();
             },
             py::arg("deg_d") = 3)
        .def("tensor",
             [](const PyAlgebra& a, int n) {
                 return PyAlgebra{tensor_current(a.alg, CommutativeAlgebra::quotient_poly(n))};
             },
             py::arg("n"))
        .def("__repr__", [](const PyAlgebra& a) {
            return "<Algebra " + a.alg->name() + " rank " + std::to_string(a.alg->rank()) +
                   ">";
        });

    m.def(
        "run",
        [](const std::string& command, const std::string& spec_text, int deg_d, int deg_l,
           int tensor, const std::string& format, const std::string& convention) {
            RunOptions opts = make_options(deg_d, deg_l, tensor, format, convention);
            RunReport rep = run_command(command, spec_text, opts);
            return py::make_tuple(exit_status(rep), render_report(rep, opts.format));
        },
        py::arg("command"), py::arg("spec_text"), py::arg("deg_d") = -1,
        py::arg("deg_l") = -1, py::arg("tensor") = -1, py::arg("format") = "text",
        py::arg("convention") = "partial",
        "Run one CLI command on spec text; returns (exit_code, report).");

    m.def(
        "canonical_print",
        [](const std::string& text) { return canonical_print(parse_spec(text)); },
        py::arg("text"), "Parse spec text and render its canonical form.");
}
