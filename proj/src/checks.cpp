#include "baselgeo/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include <json.hpp>

#include "baselgeo/analysis.hpp"
#include "baselgeo/complex_lift.hpp"
#include "baselgeo/errors.hpp"
#include "baselgeo/regions.hpp"
#include "baselgeo/rng.hpp"
#include "baselgeo/triangle.hpp"

namespace baselgeo {

namespace {

constexpr double pi = std::numbers::pi;

// How measured stands against expected for a check to pass.
enum class Mode { AbsDiff, AtMost, Above };

bool compare(Mode mode, double measured, double expected, double tolerance) {
    switch (mode) {
    case Mode::AbsDiff: return std::abs(measured - expected) <= tolerance;
    case Mode::AtMost: return measured <= expected + tolerance;
    case Mode::Above: return measured > expected - tolerance;
    }
    return false;
}

struct Outcome {
    CheckReport report;
    Mode mode = Mode::AbsDiff;
    bool aux_ok = true;
};

Outcome check_jacobian_G(const RunConfig& cfg) {
    const auto points = sample_T(cfg.jacobian_sweep_points, cfg.seed);
    const PlanarMap G = [](std::array<double, 2> q) {
        const LogRadialCoords r = angles_to_log_sides(AngularCoords(q[0], q[1]));
        return std::array<double, 2>{r.x, r.y};
    };
    double worst = 0.0;
    std::uint64_t work = 0;
    for (const AngularCoords& p : points) {
        const double margin = margin_T(p.alpha, p.beta);
        if (margin >= 0.1) {
            worst = std::max(worst, std::abs(jacobian_G_analytic(p).det() - 1.0));
            work += 1;
        }
        if (margin >= 0.03) {
            worst = std::max(worst, std::abs(fd_jacobian_det(G, {p.alpha, p.beta}, 5e-7) - 1.0));
            work += 4;
        }
    }
    return {{"jacobian-G", worst, 0.0, 1e-6, false, work, cfg.seed}, Mode::AbsDiff, true};
}

Outcome check_area_t(const RunConfig&) {
    const double area = area_T_exact();
    const bool aux = std::abs(area - 3.0 * area_T0_exact()) <= 1e-12;
    return {{"area-t", area, pi * pi / 2.0, 1e-12, false, 2, std::nullopt}, Mode::AbsDiff, aux};
}

Outcome check_area_t0(const RunConfig&) {
    return {{"area-t0", area_T0_exact(), pi * pi / 6.0, 1e-12, false, 1, std::nullopt},
            Mode::AbsDiff,
            true};
}

Outcome check_area_u0_quad(const RunConfig& cfg) {
    const NumericEstimate est = integrate_area_U0(cfg.quad_rel_tol);
    return {{"area-u0-quad", est.value, pi * pi / 6.0, est.error_bound, false, est.work,
             std::nullopt},
            Mode::AbsDiff,
            true};
}

Outcome check_area_u0_mc(const RunConfig& cfg) {
    const NumericEstimate est = mc_area_U0(cfg.mc_samples, 20.0, cfg.seed, 8);
    return {{"area-u0-mc", est.value, pi * pi / 6.0, est.error_bound, false, est.work, cfg.seed},
            Mode::AbsDiff,
            true};
}

Outcome check_cyclic(const RunConfig& cfg) {
    const auto points = sample_T(100'000, cfg.seed);
    double violations = 0.0;
    std::uint64_t work = 0;
    for (const AngularCoords& p : points) {
        if (margin_T(p.alpha, p.beta) < 1e-8) continue;
        const LogRadialCoords r = angles_to_log_sides(p);
        const LogRadialCoords c1 = cyclic_map(r);
        const RegionLabel l0 = classify_U(r);
        const RegionLabel l1 = classify_U(c1);
        const bool sharp0 = l0 == RegionLabel::Sub0 || l0 == RegionLabel::Sub1 ||
                            l0 == RegionLabel::Sub2;
        const bool sharp1 = l1 == RegionLabel::Sub0 || l1 == RegionLabel::Sub1 ||
                            l1 == RegionLabel::Sub2;
        if (sharp0 && sharp1 && l1 != successor(l0)) violations += 1.0;
        const LogRadialCoords c3 = cyclic_map(cyclic_map(c1));
        const double scale = std::max({1.0, std::abs(r.x), std::abs(r.y)});
        if (std::abs(c3.x - r.x) > 1e-12 * scale || std::abs(c3.y - r.y) > 1e-12 * scale) {
            violations += 1.0;
        }
        work += 1;
    }
    return {{"cyclic", violations, 0.0, 0.0, false, work, cfg.seed}, Mode::AbsDiff, true};
}

Outcome check_series_remainder(const RunConfig&) {
    double worst = -1.0;
    std::uint64_t work = 0;
    for (int ti = 1; ti <= 9; ++ti) {
        const double t = 0.1 * ti;
        const double limit = -std::log1p(-t);
        for (std::uint64_t n = 1; n <= 50; ++n) {
            const SeriesPartial s = log_series_partial(t, n);
            worst = std::max(worst, (limit - s.partial_sum) - s.remainder_bound);
            work += n;
        }
    }
    return {{"series-remainder", worst, 0.0, 0.0, false, work, std::nullopt}, Mode::AtMost, true};
}

Outcome check_pile_cover(const RunConfig& cfg) {
    std::mt19937_64 eng(derive_stream_seed(cfg.seed, 2));
    double violations = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double b = 0.05 + 2.95 * uniform01(eng());
        const double a = b * (0.05 + 0.9 * uniform01(eng()));
        const double top = amoeba_boundary_height(b);
        const double c = top * (0.05 + 0.9 * uniform01(eng()));
        const double margin = std::min(1e-6, 0.5 * (top - c));
        try {
            const std::uint64_t n = pile_covering_index(a, b, c, margin);
            const bool covers = pile_height(b, n) > c;
            const bool minimal = n == 1 || !(pile_height(b, n - 1) > c);
            if (!covers || !minimal) violations += 1.0;
        } catch (const NotContained&) {
            violations += 1.0;
        }
    }
    return {{"pile-cover", violations, 0.0, 0.0, false, 100, cfg.seed}, Mode::AbsDiff, true};
}

Outcome check_spread_bijection(const RunConfig& cfg) {
    double worst = 0.0;
    std::uint64_t work = 0;
    for (std::uint64_t n = 1; n <= 5; ++n) {
        const double nd = static_cast<double>(n);
        const PlanarMap squeeze = [n](std::array<double, 2> q) {
            return spread_square_bijection(n, q[0], q[1]);
        };
        const std::array<double, 2> at = {1.0 / nd, std::exp(-1.0) / (2.0 * nd)};
        worst = std::max(worst, std::abs(fd_jacobian_det(squeeze, at) - 1.0));
        work += 4;
    }
    bool aux = true;
    std::mt19937_64 eng(derive_stream_seed(cfg.seed, 3));
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = 1 + (eng() % 5);
        const double nd = static_cast<double>(n);
        const double x = (1e-3 + 5.0 * uniform01(eng())) / nd;
        const double ceiling = std::exp(-nd * x) / nd;
        const double y = ceiling * (1e-3 + 0.998 * uniform01(eng()));
        const auto q = spread_square_bijection(n, x, y);
        aux = aux && q[0] > 0.0 && q[0] < 1.0 / nd && q[1] > 0.0 && q[1] < 1.0 / nd;
        work += 1;
    }
    return {{"spread-bijection", worst, 0.0, 1e-8, false, work, cfg.seed}, Mode::AbsDiff, aux};
}

Outcome check_pipeline(const RunConfig&) {
    double sum = 0.0;
    bool aux = true;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        const double nd = static_cast<double>(n);
        const double piece = spread_square_integral(n);
        aux = aux && std::abs(piece - 1.0 / (nd * nd)) <= 1e-12;
        sum += piece;
    }
    const double target = zeta2_partial(1000).partial_sum;
    return {{"pipeline", sum, target, 1e-10, false, 1000, std::nullopt}, Mode::AbsDiff, aux};
}

Outcome check_harmonic(const RunConfig&) {
    double least = std::numeric_limits<double>::infinity();
    std::uint64_t work = 0;
    for (const std::uint64_t n : {1ull, 10ull, 100ull, 1000ull, 10000ull}) {
        least = std::min(least, harmonic_partial(n) - std::log1p(static_cast<double>(n)));
        work += n;
    }
    bool aux = true;
    for (unsigned k = 1; k <= 13; ++k) {
        const std::uint64_t block = std::uint64_t{1} << k;
        aux = aux && harmonic_partial(block) >= dyadic_grouping_lower_bound(k);
        work += block;
    }
    return {{"harmonic", least, 0.0, 0.0, false, work, std::nullopt}, Mode::Above, aux};
}

Outcome check_zeta2_bound(const RunConfig&) {
    const SeriesPartial z = zeta2_partial(1'000'000);
    bool aux = true;
    double running = 1.0;
    for (std::uint64_t n = 2; n <= 2000; ++n) {
        const double nd = static_cast<double>(n);
        running += 1.0 / (nd * nd);
        aux = aux && running < 2.0 - 1.0 / nd;
    }
    return {{"zeta2-bound", z.partial_sum, pi * pi / 6.0, 1e-6, false, z.n_terms + 2000,
             std::nullopt},
            Mode::AbsDiff,
            aux};
}

Outcome check_lift_closure(const RunConfig& cfg) {
    const auto points = sample_T(2000, cfg.seed);
    double worst = 0.0;
    bool aux = true;
    std::uint64_t work = 0;
    for (const AngularCoords& p : points) {
        const double margin = margin_T(p.alpha, p.beta);
        if (margin < 1e-3) continue;
        const auto res = lift_closure_residuals(p);
        worst = std::max({worst, std::abs(res[0]), std::abs(res[1])});
        work += 1;
        if (margin >= 1e-2) {
            aux = aux && std::abs(cosine_rule_residual(p)) <= 1e-10;
            work += 1;
        }
    }
    return {{"lift-closure", worst, 0.0, 1e-12, false, work, cfg.seed}, Mode::AbsDiff, aux};
}

Outcome check_matrix_identity(const RunConfig& cfg) {
    const auto points = sample_T(2000, cfg.seed);
    const PlanarMap branch = [](std::array<double, 2> q) { return g_tilde(q[0], q[1]); };
    double worst = 0.0;
    bool aux = true;
    std::uint64_t work = 0;
    for (const AngularCoords& p : points) {
        const double margin = margin_T(p.alpha, p.beta);
        if (margin < 1e-3) continue;
        worst = std::max(worst, verify_matrix_identity(p));
        work += 1;
        if (margin >= 0.05) {
            const std::array<double, 2> at = {pi - p.beta, pi + p.alpha};
            aux = aux && std::abs(fd_jacobian_det(branch, at) - 1.0) <= 1e-6;
            work += 4;
        }
    }
    return {{"matrix-identity", worst, 0.0, 1e-10, false, work, cfg.seed}, Mode::AbsDiff, aux};
}

struct Entry {
    const char* name;
    Outcome (*run)(const RunConfig&);
};

constexpr Entry kRegistry[] = {
    {"jacobian-G", check_jacobian_G},
    {"area-t", check_area_t},
    {"area-t0", check_area_t0},
    {"area-u0-quad", check_area_u0_quad},
    {"area-u0-mc", check_area_u0_mc},
    {"cyclic", check_cyclic},
    {"series-remainder", check_series_remainder},
    {"pile-cover", check_pile_cover},
    {"spread-bijection", check_spread_bijection},
    {"pipeline", check_pipeline},
    {"harmonic", check_harmonic},
    {"zeta2-bound", check_zeta2_bound},
    {"lift-closure", check_lift_closure},
    {"matrix-identity", check_matrix_identity},
};

CheckReport finalize(Outcome&& out, const ReportHook& hook) {
    if (hook) hook(out.report);
    out.report.passed = out.aux_ok && compare(out.mode, out.report.measured,
                                              out.report.expected, out.report.tolerance);
    return std::move(out.report);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Entry& e : kRegistry) out.emplace_back(e.name);
        return out;
    }();
    return names;
}

CheckReport run_check(const std::string& name, const RunConfig& cfg) {
    for (const Entry& e : kRegistry) {
        if (name == e.name) return finalize(e.run(cfg), ReportHook{});
    }
    throw UnknownCheck("no check named '" + name + "'");
}

std::vector<CheckReport> run_all(const RunConfig& cfg) {
    return run_all(cfg, ReportHook{});
}

std::vector<CheckReport> run_all(const RunConfig& cfg, const ReportHook& hook) {
    std::vector<CheckReport> reports;
    reports.reserve(std::size(kRegistry));
    for (const Entry& e : kRegistry) reports.push_back(finalize(e.run(cfg), hook));
    return reports;
}

int exit_status(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports) {
        if (!r.passed) return 1;
    }
    return 0;
}

std::string to_text(const std::vector<CheckReport>& reports) {
    std::string out;
    std::size_t ok = 0;
    for (const CheckReport& r : reports) {
        out += r.passed ? "PASS " : "FAIL ";
        out += r.name;
        out.append(r.name.size() < 18 ? 18 - r.name.size() : 1, ' ');
        out += "measured=" + format_double(r.measured);
        out += " expected=" + format_double(r.expected);
        out += " tolerance=" + format_double(r.tolerance);
        out += " work=" + std::to_string(r.work);
        if (r.seed) out += " seed=" + std::to_string(*r.seed);
        out += "\n";
        if (r.passed) ++ok;
    }
    out += std::to_string(ok) + "/" + std::to_string(reports.size()) + " passed\n";
    return out;
}

std::string to_json(const std::vector<CheckReport>& reports, const RunConfig& cfg) {
    nlohmann::ordered_json root;
    root["config"]["seed"] = cfg.seed;
    root["config"]["mc_samples"] = cfg.mc_samples;
    root["config"]["quad_rel_tol"] = cfg.quad_rel_tol;
    root["config"]["jacobian_sweep_points"] = cfg.jacobian_sweep_points;
    root["config"]["format"] = cfg.format == RunConfig::Format::Json ? "json" : "text";
    auto checks = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
        nlohmann::ordered_json item;
        item["name"] = r.name;
        item["measured"] = r.measured;
        item["expected"] = r.expected;
        item["tolerance"] = r.tolerance;
        item["passed"] = r.passed;
        item["work"] = r.work;
        if (r.seed) item["seed"] = *r.seed;
        checks.push_back(std::move(item));
    }
    root["checks"] = std::move(checks);
    return root.dump(2) + "\n";
}

} // namespace baselgeo
