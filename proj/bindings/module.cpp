#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "baselgeo/analysis.hpp"
#include "baselgeo/checks.hpp"
#include "baselgeo/complex_lift.hpp"
#include "baselgeo/errors.hpp"
#include "baselgeo/figures.hpp"
#include "baselgeo/regions.hpp"
#include "baselgeo/triangle.hpp"

namespace py = pybind11;

namespace {

using namespace baselgeo;

py::dict estimate_dict(const NumericEstimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["error_bound"] = e.error_bound;
    d["work"] = e.work;
    return d;
}

py::dict series_dict(const SeriesPartial& s) {
    py::dict d;
    d["n_terms"] = s.n_terms;
    d["partial_sum"] = s.partial_sum;
    d["remainder_bound"] = s.remainder_bound;
    return d;
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["measured"] = r.measured;
    d["expected"] = r.expected;
    d["tolerance"] = r.tolerance;
    d["passed"] = r.passed;
    d["work"] = r.work;
    d["seed"] = r.seed ? py::cast(*r.seed) : py::none();
    return d;
}

RunConfig make_config(std::uint64_t seed, std::uint64_t mc_samples,
                      double quad_rel_tol, std::uint64_t jacobian_sweep_points) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.mc_samples = mc_samples;
    cfg.quad_rel_tol = quad_rel_tol;
    cfg.jacobian_sweep_points = jacobian_sweep_points;
    return cfg;
}

FigureFormat parse_figure_format(const std::string& format) {
    if (format == "svg") return FigureFormat::Svg;
    if (format == "csv") return FigureFormat::Csv;
    throw py::value_error("format must be 'svg' or 'csv'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "verification core for an area-preserving triangle coordinate atlas";
    m.attr("__version__") = "0.1.0";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ClampError>(m, "ClampError", PyExc_ValueError);
    py::register_exception<NotContained>(m, "NotContained", PyExc_ValueError);
    py::register_exception<UnknownCheck>(m, "UnknownCheck", PyExc_KeyError);
    py::register_exception<UnknownFigure>(m, "UnknownFigure", PyExc_KeyError);
    py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_RuntimeError);
    py::register_exception<ToleranceNotMet>(m, "ToleranceNotMet", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def(
        "angles_to_sides",
        [](double alpha, double beta) {
            const RadialCoords q = angles_to_sides(AngularCoords(alpha, beta));
            return std::make_pair(q.a, q.b);
        },
        py::arg("alpha"), py::arg("beta"),
        "Side lengths (a, b) opposite the given angles, for base 1.");

    m.def(
        "sides_to_angles",
        [](double a, double b) {
            const AngularCoords p = sides_to_angles(RadialCoords(a, b));
            return std::make_pair(p.alpha, p.beta);
        },
        py::arg("a"), py::arg("b"),
        "Angles (alpha, beta) opposite the given sides, via the cosine rule.");

    m.def(
        "angles_to_log_sides",
        [](double alpha, double beta) {
            const LogRadialCoords r = angles_to_log_sides(AngularCoords(alpha, beta));
            return std::make_pair(r.x, r.y);
        },
        py::arg("alpha"), py::arg("beta"),
        "Log-side coordinates (-log a, -log b) of the given angles.");

    m.def(
        "log_sides_to_angles",
        [](double x, double y) {
            const AngularCoords p = log_sides_to_angles(LogRadialCoords(x, y));
            return std::make_pair(p.alpha, p.beta);
        },
        py::arg("x"), py::arg("y"),
        "Angles recovered from log-side coordinates.");

    m.def(
        "jacobian_det",
        [](double alpha, double beta) {
            return jacobian_G_analytic(AngularCoords(alpha, beta)).det();
        },
        py::arg("alpha"), py::arg("beta"),
        "Determinant of the log-side map's derivative; identically 1.");

    m.def("margin_T", &margin_T, py::arg("alpha"), py::arg("beta"),
          "Smallest slack against the angular region's three edges.");

    m.def(
        "membership_T",
        [](double alpha, double beta, double eps) {
            return std::string(to_string(membership_T(alpha, beta, eps)));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("eps") = kBoundaryEps,
        "Interior/Boundary/Outside for the angular region.");

    m.def(
        "membership_S",
        [](double a, double b, double eps) {
            return std::string(to_string(membership_S(a, b, eps)));
        },
        py::arg("a"), py::arg("b"), py::arg("eps") = kBoundaryEps,
        "Interior/Boundary/Outside for the side-length region.");

    m.def(
        "membership_U",
        [](double x, double y, double eps) {
            return std::string(to_string(membership_U(x, y, eps)));
        },
        py::arg("x"), py::arg("y"), py::arg("eps") = kBoundaryEps,
        "Interior/Boundary/Outside for the log-side region.");

    m.def(
        "classify_T",
        [](double alpha, double beta, double eps) {
            return std::string(to_string(classify_T(AngularCoords(alpha, beta), eps)));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("eps") = kBoundaryEps,
        "Median-bounded piece of the angular region holding the point.");

    m.def(
        "classify_U",
        [](double x, double y, double eps) {
            return std::string(to_string(classify_U(LogRadialCoords(x, y), eps)));
        },
        py::arg("x"), py::arg("y"), py::arg("eps") = kBoundaryEps,
        "Asymptote-bounded piece of the log-side region holding the point.");

    m.def(
        "cyclic_map",
        [](double x, double y) {
            const LogRadialCoords r = cyclic_map(LogRadialCoords(x, y));
            return std::make_pair(r.x, r.y);
        },
        py::arg("x"), py::arg("y"),
        "Order-3 relabeling (x, y) -> (-y, x - y) of the log-side region.");

    m.def(
        "cyclic_map_inverse",
        [](double x, double y) {
            const LogRadialCoords r = cyclic_map_inverse(LogRadialCoords(x, y));
            return std::make_pair(r.x, r.y);
        },
        py::arg("x"), py::arg("y"),
        "Inverse relabeling (x, y) -> (y - x, -x).");

    m.def("amoeba_boundary_height", &amoeba_boundary_height, py::arg("x"),
          "Height -log(1 - e^{-x}) of the boundary arc over x > 0.");

    m.def("area_T_exact", &area_T_exact,
          "Area of the angular region.");
    m.def("area_T0_exact", &area_T0_exact,
          "Area of the angular region's Sub0 piece.");

    m.def(
        "integrate_area_U0",
        [](double rel_tol) { return estimate_dict(integrate_area_U0(rel_tol)); },
        py::arg("rel_tol") = 1e-10,
        "Area under the boundary arc over x > 0, by adaptive quadrature.");

    m.def(
        "mc_area_U0",
        [](std::uint64_t samples, double box_side, std::uint64_t seed, unsigned shards) {
            return estimate_dict(mc_area_U0(samples, box_side, seed, shards));
        },
        py::arg("samples"), py::arg("box_side") = 20.0, py::arg("seed") = 0,
        py::arg("shards") = 1,
        "Same area by rejection sampling plus exact tentacle tails.");

    m.def("spread_square_integral", &spread_square_integral, py::arg("n"),
          "integral of e^{-n x}/n over x > 0; equals 1/n^2.");

    m.def(
        "spread_square_bijection",
        [](std::uint64_t n, double x, double y) {
            const auto uv = spread_square_bijection(n, x, y);
            return std::make_pair(uv[0], uv[1]);
        },
        py::arg("n"), py::arg("x"), py::arg("y"),
        "Area-preserving squeeze of the strip under e^{-n x}/n onto a square.");

    m.def(
        "log_series_partial",
        [](double t, std::uint64_t n_terms) {
            return series_dict(log_series_partial(t, n_terms));
        },
        py::arg("t"), py::arg("n_terms"),
        "Partial sum of t^k/k with a remainder bound.");

    m.def("pile_height", &pile_height, py::arg("x"), py::arg("n_terms"),
          "Partial sums of the boundary height at x.");

    m.def("pile_covering_index", &pile_covering_index,
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("margin"),
          "Smallest N whose pile covers the box [a, b] x [0, c].");

    m.def(
        "zeta2_partial",
        [](std::uint64_t n_terms) { return series_dict(zeta2_partial(n_terms)); },
        py::arg("n_terms"),
        "Partial sum of 1/k^2 with remainder bound 1/N.");

    m.def("harmonic_partial", &harmonic_partial, py::arg("n_terms"),
          "Partial sum of 1/k; exceeds log(1 + N).");

    m.def("dyadic_grouping_lower_bound", &dyadic_grouping_lower_bound, py::arg("k"),
          "Lower bound 1 + k/2 on the first 2^k harmonic terms.");

    m.def(
        "lift_closure_residuals",
        [](double alpha, double beta) {
            const auto r = lift_closure_residuals(AngularCoords(alpha, beta));
            return std::make_pair(r[0], r[1]);
        },
        py::arg("alpha"), py::arg("beta"),
        "Residuals of the complex edge-closure identity.");

    m.def(
        "cosine_rule_residual",
        [](double alpha, double beta) {
            return cosine_rule_residual(AngularCoords(alpha, beta));
        },
        py::arg("alpha"), py::arg("beta"),
        "Residual of the cosine rule squared out of the closure identity.");

    m.def(
        "g_tilde",
        [](double u, double v) {
            const auto xy = g_tilde(u, v);
            return std::make_pair(xy[0], xy[1]);
        },
        py::arg("u"), py::arg("v"),
        "Branch inverse built from the lift's imaginary parts.");

    m.def(
        "verify_matrix_identity",
        [](double alpha, double beta) {
            return verify_matrix_identity(AngularCoords(alpha, beta));
        },
        py::arg("alpha"), py::arg("beta"),
        "Gap between the log-side map and its conjugated branch inverse.");

    m.def("check_names", []() { return check_names(); },
          "Registered check names, in run order.");

    m.def(
        "run_check",
        [](const std::string& name, std::uint64_t seed, std::uint64_t mc_samples,
           double quad_rel_tol, std::uint64_t jacobian_sweep_points) {
            return report_dict(run_check(
                name, make_config(seed, mc_samples, quad_rel_tol, jacobian_sweep_points)));
        },
        py::arg("name"), py::arg("seed") = 0,
        py::arg("mc_samples") = 1'000'000, py::arg("quad_rel_tol") = 1e-10,
        py::arg("jacobian_sweep_points") = 10'000,
        "Runs one named check and returns its report.");

    m.def(
        "run_all",
        [](std::uint64_t seed, std::uint64_t mc_samples, double quad_rel_tol,
           std::uint64_t jacobian_sweep_points) {
            std::vector<py::dict> out;
            for (const CheckReport& r : run_all(
                     make_config(seed, mc_samples, quad_rel_tol, jacobian_sweep_points))) {
                out.push_back(report_dict(r));
            }
            return out;
        },
        py::arg("seed") = 0, py::arg("mc_samples") = 1'000'000,
        py::arg("quad_rel_tol") = 1e-10, py::arg("jacobian_sweep_points") = 10'000,
        "Runs every registered check in order.");

    m.def("figure_names", []() { return figure_names(); },
          "Registered figure names.");

    m.def(
        "render_figure",
        [](const std::string& name, const std::string& format) {
            return render_figure(figure_from_name(name), parse_figure_format(format));
        },
        py::arg("name"), py::arg("format") = "svg",
        "Renders a figure to an SVG or CSV string.");
}
