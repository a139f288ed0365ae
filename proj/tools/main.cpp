#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "baselgeo/checks.hpp"
#include "baselgeo/errors.hpp"
#include "baselgeo/figures.hpp"
#include "baselgeo/regions.hpp"
#include "baselgeo/triangle.hpp"

namespace {

using namespace baselgeo;

void write_or_print(const std::string& body, const std::string& out) {
    if (out.empty()) {
        std::fputs(body.c_str(), stdout);
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw IoError("cannot open '" + out + "' for writing");
    file << body;
    file.flush();
    if (!file.good()) throw IoError("write to '" + out + "' failed");
}

int run_check_command(const std::string& name, RunConfig cfg, const std::string& format,
                      const std::string& out) {
    cfg.format =
        format == "json" ? RunConfig::Format::Json : RunConfig::Format::Text;
    std::vector<CheckReport> reports;
    if (name == "all") {
        reports = run_all(cfg);
    } else {
        reports.push_back(run_check(name, cfg));
    }
    write_or_print(cfg.format == RunConfig::Format::Json ? to_json(reports, cfg)
                                                         : to_text(reports),
                   out);
    return exit_status(reports);
}

int run_solve_command(const std::vector<double>& angles, const std::vector<double>& sides,
                      const std::vector<double>& logsides) {
    const int forms = (angles.empty() ? 0 : 1) + (sides.empty() ? 0 : 1) +
                      (logsides.empty() ? 0 : 1);
    if (forms != 1) {
        std::fprintf(stderr,
                     "error: provide exactly one of --angles, --sides, --logsides\n");
        return 2;
    }
    const AngularCoords p = [&]() -> AngularCoords {
        if (!angles.empty()) return {angles[0], angles[1]};
        if (!sides.empty()) return sides_to_angles(RadialCoords(sides[0], sides[1]));
        return log_sides_to_angles(LogRadialCoords(logsides[0], logsides[1]));
    }();
    const RadialCoords q = angles_to_sides(p);
    const LogRadialCoords r = angles_to_log_sides(p);
    std::printf("angles: alpha=%.7f beta=%.7f gamma=%.7f\n", p.alpha, p.beta, p.gamma());
    std::printf("sides: A=%.7f B=%.7f (base 1)\n", q.a, q.b);
    std::printf("log-sides: x=%.7f y=%.7f\n", r.x, r.y);
    std::printf("labels: angular=%s log-side=%s\n", to_string(classify_T(p)),
                to_string(classify_U(r)));
    return 0;
}

int run_plot_command(const std::string& figure, const std::string& format,
                     const std::string& out) {
    const Figure which = figure_from_name(figure);
    const FigureFormat ff = format == "csv" ? FigureFormat::Csv : FigureFormat::Svg;
    if (out.empty()) {
        std::fputs(render_figure(which, ff).c_str(), stdout);
    } else {
        render_figure_to_file(which, ff, out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for an area-preserving triangle coordinate atlas"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run one named check, or all of them");
    std::string check_name = "all";
    RunConfig cfg;
    std::string check_format = "text";
    std::string check_out;
    check->add_option("name", check_name, "check name, or 'all'")->capture_default_str();
    check->add_option("--seed", cfg.seed, "base seed for the seeded checks")
        ->envname("BASELGEO_SEED")
        ->capture_default_str();
    check->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample count")
        ->capture_default_str();
    check->add_option("--quad-rtol", cfg.quad_rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    check->add_option("--format", check_format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    check->add_option("--out", check_out, "write the report to this file");

    auto* solve = app.add_subcommand("solve", "convert one triangle between its charts");
    std::vector<double> angles;
    std::vector<double> sides;
    std::vector<double> logsides;
    solve->add_option("--angles", angles, "base angles, radians")->expected(2);
    solve->add_option("--sides", sides, "side lengths opposite the base angles")
        ->expected(2);
    solve->add_option("--logsides", logsides, "negated logs of the side lengths")
        ->expected(2);

    auto* plot = app.add_subcommand("plot", "render a figure");
    std::string figure;
    std::string plot_format = "svg";
    std::string plot_out;
    plot->add_option("figure", figure, "regions-ST, amoeba, subdivision, or pile")
        ->required();
    plot->add_option("--format", plot_format, "figure format")
        ->check(CLI::IsMember({"svg", "csv"}))
        ->capture_default_str();
    plot->add_option("--out", plot_out, "write the figure to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            return run_check_command(check_name, cfg, check_format, check_out);
        }
        if (solve->parsed()) return run_solve_command(angles, sides, logsides);
        if (plot->parsed()) return run_plot_command(figure, plot_format, plot_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
