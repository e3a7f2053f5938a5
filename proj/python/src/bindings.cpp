#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>

#include "lamarle/catalog.hpp"
#include "lamarle/curvature.hpp"
#include "lamarle/error.hpp"
#include "lamarle/expr.hpp"
#include "lamarle/lorentz.hpp"
#include "lamarle/surface_io.hpp"

namespace py = pybind11;
using namespace lamarle;

namespace {

SurfaceClass to_class(const std::string& text) {
    if (auto c = parse_surface_class(text)) return *c;
    throw py::value_error("surface class must be M1, M2 or M3, got '" + text + "'");
}

Interval to_interval(const std::pair<double, double>& r) { return {r.first, r.second}; }
std::pair<double, double> from_interval(const Interval& r) { return {r.lo, r.hi}; }

RuledSurface make_surface(const std::string& name, const std::array<std::string, 3>& base,
                          const std::array<std::string, 3>& director, std::pair<double, double> u_range,
                          std::pair<double, double> v_range) {
    const Interval ur = to_interval(u_range);
    return RuledSurface(name, ParamCurve(parse_curve(base), ur), ParamCurve(parse_curve(director), ur),
                        to_interval(v_range));
}

py::dict frame_dict(const DirectorFrame& f) {
    py::dict d;
    d["e"] = f.e;
    d["n"] = f.n;
    d["xi"] = f.xi;
    d["kappa"] = f.kappa;
    d["tau"] = f.tau;
    d["frame_type"] = std::string(to_string(f.frame_type));
    d["renormalized"] = f.renormalized;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ruled surfaces in Lorentz 3-space";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::object(py::exception<Error>(m, "LamarleError", PyExc_ValueError)); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const py::object& type = error_type.get_stored();
            py::object inst = type(std::string(error_code_name(e.code())) + ": " + e.what());
            inst.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(type.ptr(), inst.ptr());
        }
    });

    py::class_<LVec3>(m, "LVec3")
        .def(py::init<double, double, double>(), py::arg("x1") = 0.0, py::arg("x2") = 0.0, py::arg("x3") = 0.0)
        .def_readwrite("x1", &LVec3::x1)
        .def_readwrite("x2", &LVec3::x2)
        .def_readwrite("x3", &LVec3::x3)
        .def("__add__", [](const LVec3& a, const LVec3& b) { return a + b; })
        .def("__sub__", [](const LVec3& a, const LVec3& b) { return a - b; })
        .def("__mul__", [](const LVec3& a, double s) { return s * a; })
        .def("__rmul__", [](const LVec3& a, double s) { return s * a; })
        .def("__eq__", [](const LVec3& a, const LVec3& b) { return a == b; })
        .def("to_tuple", [](const LVec3& v) { return std::make_tuple(v.x1, v.x2, v.x3); })
        .def("__iter__", [](const LVec3& v) { return py::iter(py::make_tuple(v.x1, v.x2, v.x3)); })
        .def("__repr__", [](const LVec3& v) {
            return "LVec3(" + py::repr(py::float_(v.x1)).cast<std::string>() + ", " +
                   py::repr(py::float_(v.x2)).cast<std::string>() + ", " +
                   py::repr(py::float_(v.x3)).cast<std::string>() + ")";
        });
    py::implicitly_convertible<py::tuple, LVec3>();

    m.def("metric", [](const LVec3& a, const LVec3& b) { return metric(a, b); });
    m.def("cross", [](const LVec3& a, const LVec3& b) { return lorentz_cross(a, b); });
    m.def("norm", [](const LVec3& v) { return norm(v); });
    m.def(
        "causal_character",
        [](const LVec3& v, double eps) { return std::string(to_string(causal_character(v, eps))); },
        py::arg("v"), py::arg("eps") = kCausalEpsilon);
    m.def(
        "angle",
        [](const LVec3& v, const LVec3& w) {
            const AngleResult r = angle_between(v, w);
            return std::make_tuple(r.theta, std::string(to_string(r.kind)));
        },
        "Angle between two non-null vectors as (theta, kind).");

    py::class_<Expr>(m, "Expr")
        .def("__call__", [](const Expr& e, double u) { return eval(e, u); })
        .def("eval", [](const Expr& e, double u) { return eval(e, u); })
        .def("derivatives",
             [](const Expr& e, double u) {
                 const Dual2 d = eval_dual2(e, u);
                 return std::make_tuple(d.value, d.d1, d.d2);
             })
        .def("__str__", [](const Expr& e) { return to_string(e); });
    m.def("parse_expression", [](const std::string& s) { return parse_expression(s); });

    py::class_<RuledSurface>(m, "RuledSurface")
        .def(py::init(&make_surface), py::arg("name"), py::arg("base"), py::arg("director"), py::arg("u_range"),
             py::arg("v_range"))
        .def_property_readonly("name", &RuledSurface::name)
        .def_property_readonly("u_range", [](const RuledSurface& s) { return from_interval(s.u_range()); })
        .def_property_readonly("v_range", [](const RuledSurface& s) { return from_interval(s.v_range()); })
        .def("with_v_range",
             [](const RuledSurface& s, std::pair<double, double> r) { return s.with_v_range(to_interval(r)); })
        .def("__call__", [](const RuledSurface& s, double u, double v) { return evaluate(s, u, v); })
        .def("to_json", &surface_to_json)
        .def("__repr__", [](const RuledSurface& s) { return "<RuledSurface '" + s.name() + "'>"; });

    py::class_<CatalogEntry>(m, "CatalogEntry")
        .def_readonly("name", &CatalogEntry::name)
        .def_readonly("surface", &CatalogEntry::surface)
        .def_property_readonly("surface_class",
                               [](const CatalogEntry& e) { return std::string(to_string(e.surface_class)); })
        .def_readonly("known_P", &CatalogEntry::known_P)
        .def_readonly("known_K_formula", &CatalogEntry::known_K_formula)
        .def("known_K", [](const CatalogEntry& e, double v) { return e.known_K(v); });

    m.def("catalog_names", &catalog_names);
    m.def("get_surface", [](const std::string& name) { return get_surface(name); });
    m.def(
        "random_surface",
        [](const std::string& cls, std::uint64_t seed) { return random_surface(to_class(cls), seed); },
        py::arg("surface_class"), py::arg("seed"));
    m.def("surface_from_json", [](const std::string& text) { return surface_from_json(text); });

    m.def(
        "classify",
        [](const RuledSurface& s, double u, double v) { return std::string(to_string(classify(s, u, v))); });
    m.def("distribution_parameter", [](const RuledSurface& s, double u) { return distribution_parameter(s, u); });
    m.def("striction_point", [](const RuledSurface& s, double u) { return striction_point(s, u); });
    m.def("director_frame", [](const RuledSurface& s, double u) { return frame_dict(director_frame(s.director(), u)); });
    m.def("valid_v_range", [](const RuledSurface& s) {
        return from_interval(valid_v_range(s, causal_class(s, s.u_range().midpoint())));
    });
    m.def("first_forms", [](const RuledSurface& s, double u, double v) {
        const FirstFundamentalForm f = first_forms(s, u, v);
        return std::make_tuple(f.E, f.F, f.G);
    });
    m.def("second_forms", [](const RuledSurface& s, double u, double v) {
        const SecondFundamentalForm f = second_forms(s, u, v);
        return std::make_tuple(f.L, f.N, f.M);
    });
    m.def("gaussian_curvature_forms",
          [](const RuledSurface& s, double u, double v) { return gaussian_curvature_forms(s, u, v); });
    m.def("lamarle_curvature",
          [](const std::string& cls, double P, double v) { return lamarle_curvature(to_class(cls), P, v); });

    py::class_<LamarleReport>(m, "LamarleReport")
        .def_property_readonly("surface_class",
                               [](const LamarleReport& r) { return std::string(to_string(r.surface_class)); })
        .def_readonly("u", &LamarleReport::u)
        .def_readonly("v", &LamarleReport::v)
        .def_readonly("v_striction", &LamarleReport::v_striction)
        .def_readonly("P", &LamarleReport::P)
        .def_readonly("K_forms", &LamarleReport::K_forms)
        .def_readonly("K_lamarle", &LamarleReport::K_lamarle)
        .def_readonly("abs_diff", &LamarleReport::abs_diff)
        .def_readonly("rel_diff", &LamarleReport::rel_diff)
        .def_readonly("status", &LamarleReport::status)
        .def_readonly("message", &LamarleReport::message)
        .def("ok", &LamarleReport::ok);
    m.def("verify_lamarle", &verify_lamarle, py::arg("surface"), py::arg("nu") = 41, py::arg("nv") = 33);
    m.def("max_abs_diff", [](const std::vector<LamarleReport>& r) { return summarize(r).max_abs_diff; });
}
