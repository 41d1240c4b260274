#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "minkasym/complete.hpp"
#include "minkasym/diagram.hpp"
#include "minkasym/families.hpp"
#include "minkasym/gauges.hpp"
#include "minkasym/polygon_io.hpp"
#include "minkasym/symm.hpp"
#include "minkasym/verify.hpp"

namespace py = pybind11;
using namespace minkasym;

namespace {

using Points = std::vector<std::array<double, 2>>;

ConvexPolygon to_poly(const Points& pts) {
    std::vector<Vec2> v;
    v.reserve(pts.size());
    for (const auto& p : pts) v.push_back({p[0], p[1]});
    return make_polygon(std::move(v));
}

Points from_poly(const ConvexPolygon& p) {
    Points out;
    for (const auto& v : p.vertices()) out.push_back({v.x, v.y});
    return out;
}

py::dict report_dict(const CompletenessReport& r) {
    py::dict d;
    d["r"] = r.r;
    d["R"] = r.R;
    d["D"] = r.D;
    d["w"] = r.w;
    d["s"] = r.s;
    d["dw_ratio"] = r.dw_ratio;
    d["pseudo_complete"] = r.pseudo_complete;
    d["complete"] = r.complete;
    d["constant_width"] = r.constant_width;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minkowski asymmetry and symmetrization ratios of convex polygons";

    static py::exception<Error> base(m, "MinkasymError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(base.ptr(), e.what());
        }
    });

    m.def("polygon", [](const Points& pts) { return from_poly(to_poly(pts)); }, py::arg("points"),
          "convex hull in canonical CCW order");
    m.def("family", [](const std::string& name, const std::map<std::string, double>& params) {
        return from_poly(make_family({name, params}));
    }, py::arg("name"), py::arg("params") = std::map<std::string, double>{});

    m.def("asymmetry", [](const Points& pts) {
        auto r = minkowski_asymmetry(to_poly(pts));
        return py::make_tuple(r.s, py::make_tuple(r.center.x, r.center.y));
    }, py::arg("points"), "(s, center)");
    m.def("centered", [](const Points& pts) {
        auto k = to_poly(pts);
        return from_poly(translate(k, -minkowski_asymmetry(k).center));
    }, py::arg("points"));
    m.def("alpha", [](const Points& pts) { return alpha(to_poly(pts)); }, py::arg("points"));
    m.def("tau", [](const Points& pts) { return tau(to_poly(pts)); }, py::arg("points"));
    m.def("crossings", [](const Points& pts) {
        auto cs = crossing_count(to_poly(pts));
        py::dict d;
        d["points"] = cs.points.size();
        d["segments"] = cs.segments.size();
        d["code"] = cs.count_code();
        return d;
    }, py::arg("points"));

    m.def("completeness", [](const Points& k, const Points& c, double tol) {
        return report_dict(completeness_report(to_poly(k), GaugeBody(to_poly(c)), tol));
    }, py::arg("body"), py::arg("gauge"), py::arg("tol") = kTolExact);
    m.def("hood", [](int mm) {
        auto h = hood(mm);
        py::dict d;
        d["r"] = h.r;
        d["body"] = from_poly(h.body);
        d["disk"] = from_poly(h.disk.body());
        return d;
    }, py::arg("m") = 4096);
    m.def("c_lambda", [](const Points& k, double lam) { return from_poly(c_lambda(to_poly(k), lam).body()); },
          py::arg("body"), py::arg("lam"));
    m.def("euclidean_dw_bound", &euclidean_dw_bound, py::arg("D"));
    m.def("tilde_s", &tilde_s);

    m.def("verify", [](const std::string& suite, std::size_t samples, std::uint64_t seed) {
        VerifyOptions o;
        o.samples = samples;
        o.seed = seed;
        py::list out;
        for (const auto& s : run_suite(suite, options_from_env(o))) {
            py::dict d;
            d["suite"] = s.suite;
            d["checks"] = s.checks;
            d["failures"] = s.failures.size();
            d["notes"] = s.notes;
            out.append(d);
        }
        return out;
    }, py::arg("suite"), py::arg("samples") = 500, py::arg("seed") = 1);
    m.def("diagram_csv", [](const std::string& which, int grid) { return to_csv(make_diagram(which, grid)); },
          py::arg("which"), py::arg("grid") = 50);
}
