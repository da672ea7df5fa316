#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "tclass/classt.hpp"
#include "tclass/cli.hpp"
#include "tclass/error.hpp"
#include "tclass/geometry.hpp"
#include "tclass/oracle.hpp"
#include "tclass/series.hpp"
#include "tclass/weights.hpp"

namespace py = pybind11;
using namespace tclass;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Negative-coefficient analytic function classes: criteria, radii, oracle";

    static py::exception<Error> error_type(m, "TClassError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            std::string message = std::string(to_string(e.code())) + ": " + e.what();
            py::object instance = py::reinterpret_borrow<py::object>(error_type.ptr())(message);
            instance.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    py::enum_<OperatorMode>(m, "OperatorMode")
        .value("integral", OperatorMode::integral)
        .value("dual", OperatorMode::dual);
    py::enum_<RadiusKind>(m, "RadiusKind")
        .value("close_to_convex", RadiusKind::close_to_convex)
        .value("starlike", RadiusKind::starlike)
        .value("convex", RadiusKind::convex);
    py::enum_<ProductKind>(m, "ProductKind")
        .value("gamma", ProductKind::gamma)
        .value("xi", ProductKind::xi)
        .value("delta", ProductKind::delta)
        .value("alpha", ProductKind::alpha);
    py::enum_<TailVerdict>(m, "TailVerdict")
        .value("positive", TailVerdict::positive)
        .value("negative", TailVerdict::negative)
        .value("inconclusive", TailVerdict::inconclusive);

    py::class_<NegCoeffSeries>(m, "NegCoeffSeries")
        .def(py::init<int>(), py::arg("j") = 1)
        .def(py::init<int, std::map<int, double>>(), py::arg("j"), py::arg("terms"))
        .def_property_readonly("j", &NegCoeffSeries::gap)
        .def_property_readonly("K", &NegCoeffSeries::truncation)
        .def_property_readonly("terms", &NegCoeffSeries::terms)
        .def("coefficient", &NegCoeffSeries::coefficient)
        .def("__call__", [](const NegCoeffSeries& f, Complex z) { return evaluate(f, z, 0); })
        .def(py::self == py::self)
        .def("__repr__", [](const NegCoeffSeries& f) {
            std::ostringstream s;
            s << "NegCoeffSeries(j=" << f.gap() << ", terms={";
            const char* sep = "";
            for (const auto& [k, a] : f.terms()) {
                s << sep << k << ": " << a;
                sep = ", ";
            }
            s << "})";
            return s.str();
        });

    py::class_<ClassParams>(m, "ClassParams")
        .def(py::init([](int n, int mm, double beta, int j, OperatorMode mode) {
                 ClassParams p{n, mm, beta, j, mode};
                 validate(p);
                 return p;
             }),
             py::arg("n") = 0, py::arg("m") = 0, py::arg("beta") = 0.0, py::arg("j") = 1,
             py::arg("mode") = OperatorMode::dual)
        .def_readwrite("n", &ClassParams::n)
        .def_readwrite("m", &ClassParams::m)
        .def_readwrite("beta", &ClassParams::beta)
        .def_readwrite("j", &ClassParams::j)
        .def_readwrite("mode", &ClassParams::mode);

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("valid", &ValidityReport::valid)
        .def_readonly("first_failure_k", &ValidityReport::first_failure_k)
        .def_readonly("scanned_to", &ValidityReport::scanned_to)
        .def_readonly("tail_verdict", &ValidityReport::tail_verdict);

    py::class_<Deficiency>(m, "Deficiency")
        .def_readonly("sigma", &Deficiency::sigma)
        .def_readonly("member", &Deficiency::member);

    py::class_<Decomposition>(m, "Decomposition")
        .def(py::init<>())
        .def_readwrite("mu_j", &Decomposition::mu_j)
        .def_readwrite("mus", &Decomposition::mus);

    py::class_<ProductParamResult>(m, "ProductParamResult")
        .def_readonly("kind", &ProductParamResult::kind)
        .def_readonly("printed_value", &ProductParamResult::printed_value)
        .def_readonly("derived_value", &ProductParamResult::derived_value)
        .def_readonly("attained_k", &ProductParamResult::attained_k)
        .def_readonly("feasible", &ProductParamResult::feasible);

    py::class_<RadiusResult>(m, "RadiusResult")
        .def_readonly("value", &RadiusResult::value)
        .def_readonly("attained_k", &RadiusResult::attained_k)
        .def_readonly("scanned_to", &RadiusResult::scanned_to)
        .def_readonly("clipped", &RadiusResult::clipped);

    py::class_<DistortionEnvelope>(m, "DistortionEnvelope")
        .def_readonly("lower", &DistortionEnvelope::lower)
        .def_readonly("upper", &DistortionEnvelope::upper)
        .def_readonly("r", &DistortionEnvelope::r)
        .def_readonly("i", &DistortionEnvelope::i)
        .def_readonly("vacuous_lower", &DistortionEnvelope::vacuous_lower);

    py::class_<SampleGrid>(m, "SampleGrid")
        .def(py::init<std::vector<double>, int, std::vector<double>>(), py::arg("radii"),
             py::arg("angles"), py::arg("real_axis_refinement") = std::vector<double>{})
        .def_static("default_grid", &SampleGrid::default_grid)
        .def_readwrite("radii", &SampleGrid::radii)
        .def_readwrite("angles", &SampleGrid::angles)
        .def_readwrite("real_axis_refinement", &SampleGrid::real_axis_refinement);

    py::class_<MarginReport>(m, "MarginReport")
        .def_readonly("margin", &MarginReport::margin)
        .def_readonly("worst_z", &MarginReport::worst_z)
        .def_readonly("degenerate_samples", &MarginReport::degenerate_samples);

    m.def("evaluate", &evaluate, py::arg("f"), py::arg("z"), py::arg("order") = 0);
    m.def("apply_operator", &apply_operator, py::arg("f"), py::arg("p"), py::arg("mode"));
    m.def("hadamard", &hadamard);
    m.def("convex_combine",
          [](const std::vector<NegCoeffSeries>& fs, const std::vector<double>& lambdas) {
              return convex_combine(fs, lambdas);
          });
    m.def("bernardi", &bernardi, py::arg("f"), py::arg("c"));
    m.def("quadratic_combine", &quadratic_combine);

    m.def("weight", &weight, py::arg("k"), py::arg("p"));
    m.def("validity", &validity, py::arg("p"), py::arg("K"));
    m.def("dominates", &dominates, py::arg("p1"), py::arg("p2"), py::arg("K"));

    m.def("deficiency", &deficiency, py::arg("f"), py::arg("p"));
    m.def("coeff_bound", &coeff_bound, py::arg("k"), py::arg("p"));
    m.def("extremal", &extremal, py::arg("k"), py::arg("p"));
    m.def("decompose", &decompose, py::arg("f"), py::arg("p"));
    m.def("recompose", &recompose, py::arg("d"), py::arg("p"));
    m.def("product_parameter", &product_parameter, py::arg("kind"), py::arg("p"),
          py::arg("eta") = py::none(), py::arg("K") = kDefaultKmax);

    m.def("radius",
          [](RadiusKind kind, const ClassParams& p, double rho, int kmax, bool full_scan) {
              return radius(kind, p, rho, {kmax, full_scan});
          },
          py::arg("kind"), py::arg("p"), py::arg("rho") = 0.0, py::arg("kmax") = kDefaultKmax,
          py::arg("full_scan") = false);
    m.def("bernardi_univalence_radius",
          [](const ClassParams& p, double c, int kmax, bool full_scan) {
              return bernardi_univalence_radius(p, c, {kmax, full_scan});
          },
          py::arg("p"), py::arg("c"), py::arg("kmax") = kDefaultKmax,
          py::arg("full_scan") = false);
    m.def("distortion_envelope", &distortion_envelope, py::arg("p"), py::arg("i"), py::arg("r"));

    m.def("membership_margin",
          [](const NegCoeffSeries& f, const ClassParams& p, const SampleGrid& grid) {
              return membership_margin(f, p, grid);
          },
          py::arg("f"), py::arg("p"), py::arg("grid") = SampleGrid::default_grid());
    m.def("geometry_margin",
          [](RadiusKind kind, const NegCoeffSeries& f, double rho, double r, int angles) {
              return geometry_margin(kind, f, rho, r, angles);
          },
          py::arg("kind"), py::arg("f"), py::arg("rho"), py::arg("r"), py::arg("angles") = 256);
    m.def("transform_univalence_margin",
          [](const NegCoeffSeries& g, double r, int angles) {
              return transform_univalence_margin(g, r, angles);
          },
          py::arg("g"), py::arg("r"), py::arg("angles") = 256);
    m.def("distortion_extremes",
          [](const NegCoeffSeries& f, int i, double r, OperatorMode mode, int angles) {
              const DistortionExtremes e = distortion_extremes(f, i, r, mode, angles);
              return py::make_tuple(e.min_abs, e.max_abs);
          },
          py::arg("f"), py::arg("i"), py::arg("r"), py::arg("mode"), py::arg("angles") = 256);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out;
              std::ostringstream err;
              const int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run the command-line front end in-process; returns (exit_code, stdout, stderr).");

#ifdef TCLASS_VERSION
    m.attr("__version__") = TCLASS_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
