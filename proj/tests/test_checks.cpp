#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "baselgeo/checks.hpp"
#include "baselgeo/errors.hpp"
#include "baselgeo/figures.hpp"
#include "baselgeo/regions.hpp"
#include "baselgeo/triangle.hpp"

using namespace baselgeo;

namespace {

constexpr double pi = std::numbers::pi;

RunConfig small_config() {
    RunConfig cfg;
    cfg.seed = 3;
    cfg.mc_samples = 20'000;
    cfg.quad_rel_tol = 1e-8;
    cfg.jacobian_sweep_points = 400;
    cfg.format = RunConfig::Format::Json;
    return cfg;
}

struct CsvRow {
    std::string curve;
    double x;
    double y;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "curve,x,y");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        REQUIRE(c1 != std::string::npos);
        REQUIRE(c2 != std::string::npos);
        rows.push_back({line.substr(0, c1),
                        std::stod(line.substr(c1 + 1, c2 - c1 - 1)),
                        std::stod(line.substr(c2 + 1))});
    }
    return rows;
}

} // namespace

TEST_CASE("the check registry is stable and rejects unknown names") {
    const auto& names = check_names();
    CHECK(names.size() == 14);
    CHECK(names.front() == "jacobian-G");
    for (const char* expected :
         {"jacobian-G", "area-t", "area-t0", "area-u0-quad", "area-u0-mc", "cyclic",
          "series-remainder", "pile-cover", "spread-bijection", "pipeline", "harmonic",
          "zeta2-bound", "lift-closure", "matrix-identity"}) {
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
    CHECK_THROWS_AS(run_check("nonsense", small_config()), UnknownCheck);
}

TEST_CASE("individual checks report their headline numbers") {
    const RunConfig cfg = small_config();

    const CheckReport t0 = run_check("area-t0", cfg);
    CHECK(t0.passed);
    CHECK(t0.tolerance == 1e-12);
    CHECK(std::abs(t0.measured - pi * pi / 6.0) < 1e-12);
    CHECK(!t0.seed.has_value());

    const CheckReport jac = run_check("jacobian-G", cfg);
    CHECK(jac.passed);
    CHECK(jac.measured < 1e-6);
    CHECK(jac.work >= 2 * cfg.jacobian_sweep_points);
    CHECK(jac.seed.has_value());

    const CheckReport mc = run_check("area-u0-mc", cfg);
    CHECK(mc.passed);
    CHECK(mc.seed.has_value());
    CHECK(*mc.seed == cfg.seed);
    CHECK(mc.work == cfg.mc_samples);
    CHECK(std::abs(mc.measured - mc.expected) <= mc.tolerance);

    const CheckReport z = run_check("zeta2-bound", cfg);
    CHECK(z.passed);
    CHECK(z.tolerance == 1e-6);
    CHECK(z.work >= 1'000'000);
}

TEST_CASE("run_all covers every registered check and all pass") {
    const RunConfig cfg = small_config();
    const auto reports = run_all(cfg);
    REQUIRE(reports.size() == check_names().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(reports[i].name);
        CHECK(reports[i].name == check_names()[i]);
        CHECK(reports[i].passed);
        CHECK(std::isfinite(reports[i].measured));
        CHECK(std::isfinite(reports[i].tolerance));
    }
    CHECK(exit_status(reports) == 0);
}

TEST_CASE("tampering with a report flips the exit status") {
    const RunConfig cfg = small_config();

    const auto tampered_measure = run_all(cfg, [](CheckReport& r) {
        if (r.name == "zeta2-bound") r.measured += 1e-3;
    });
    int failed = 0;
    for (const auto& r : tampered_measure) {
        if (!r.passed) {
            ++failed;
            CHECK(r.name == "zeta2-bound");
        }
    }
    CHECK(failed == 1);
    CHECK(exit_status(tampered_measure) == 1);

    const auto tampered_expected = run_all(cfg, [](CheckReport& r) {
        if (r.name == "area-t") r.expected += 1.0;
    });
    CHECK(exit_status(tampered_expected) == 1);
}

TEST_CASE("JSON reports are deterministic and carry the config echo") {
    const RunConfig cfg = small_config();
    const std::string a = to_json(run_all(cfg), cfg);
    const std::string b = to_json(run_all(cfg), cfg);
    CHECK(a == b);

    const nlohmann::json doc = nlohmann::json::parse(a);
    REQUIRE(doc.contains("config"));
    REQUIRE(doc.contains("checks"));
    CHECK(doc["config"]["seed"] == 3);
    CHECK(doc["config"]["mc_samples"] == 20'000);
    CHECK(doc["config"]["quad_rel_tol"] == 1e-8);
    CHECK(doc["config"]["jacobian_sweep_points"] == 400);
    CHECK(doc["config"]["format"] == "json");
    REQUIRE(doc["checks"].size() == check_names().size());
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("measured"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("passed"));
        CHECK(c.contains("work"));
        if (c["name"] == "area-u0-mc") CHECK(c.contains("seed"));
        if (c["name"] == "area-t0") CHECK(!c.contains("seed"));
        CHECK(c["passed"] == true);
    }

    RunConfig other = cfg;
    other.seed = 4;
    const std::string c = to_json(run_all(other), other);
    CHECK(c != a);
}

TEST_CASE("text reports summarize pass counts") {
    const RunConfig cfg = small_config();
    const auto reports = run_all(cfg);
    const std::string text = to_text(reports);
    for (const auto& name : check_names()) {
        CHECK(text.find(name) != std::string::npos);
    }
    CHECK(text.find("pass") != std::string::npos);
    CHECK(text.find("14/14") != std::string::npos);

    CHECK(exit_status({}) == 0);
}

TEST_CASE("figure names parse and unknown figures are rejected") {
    const auto& names = figure_names();
    REQUIRE(names.size() == 4);
    CHECK(figure_from_name("regions-ST") == Figure::RegionsST);
    CHECK(figure_from_name("amoeba") == Figure::Amoeba);
    CHECK(figure_from_name("subdivision") == Figure::Subdivision);
    CHECK(figure_from_name("pile") == Figure::Pile);
    CHECK_THROWS_AS(figure_from_name("bogus"), UnknownFigure);
}

TEST_CASE("amoeba CSV rows are boundary points and pass through log 2") {
    const auto rows = parse_csv(render_figure(Figure::Amoeba, FigureFormat::Csv));
    REQUIRE(rows.size() > 100);
    bool through_log2 = false;
    const double l2 = std::log(2.0);
    for (const CsvRow& r : rows) {
        CHECK(membership_U(r.x, r.y) == Membership::Boundary);
        if (std::abs(r.x - l2) < 1e-12 && std::abs(r.y - l2) < 1e-12) through_log2 = true;
    }
    CHECK(through_log2);
}

TEST_CASE("region outline CSV rows lie on the respective boundaries") {
    const auto rows = parse_csv(render_figure(Figure::RegionsST, FigureFormat::Csv));
    std::size_t t_rows = 0;
    std::size_t s_rows = 0;
    for (const CsvRow& r : rows) {
        if (r.curve == "T-outline") {
            CHECK(membership_T(r.x, r.y) == Membership::Boundary);
            ++t_rows;
        } else if (r.curve == "S-boundary") {
            CHECK(membership_S(r.x, r.y) == Membership::Boundary);
            ++s_rows;
        }
    }
    CHECK(t_rows >= 4);
    CHECK(s_rows >= 4);
}

TEST_CASE("subdivision rays start at the origin and ride the dividing lines") {
    const auto rows = parse_csv(render_figure(Figure::Subdivision, FigureFormat::Csv));
    std::vector<std::string> ray_names;
    std::string last_curve;
    for (const CsvRow& r : rows) {
        if (r.curve.rfind("asymptote-", 0) == 0) {
            if (r.curve != last_curve) {
                ray_names.push_back(r.curve);
                CHECK(r.x == 0.0);
                CHECK(r.y == 0.0);
            } else {
                CHECK(classify_U(LogRadialCoords(r.x, r.y)) == RegionLabel::Boundary);
            }
        }
        if (r.curve.rfind("median-", 0) == 0 && r.curve == last_curve) {
            CHECK(classify_T(AngularCoords(r.x, r.y)) == RegionLabel::Boundary);
        }
        last_curve = r.curve;
    }
    CHECK(ray_names.size() == 3);
}

TEST_CASE("pile CSV layers increase with depth and stay under the boundary") {
    const auto rows = parse_csv(render_figure(Figure::Pile, FigureFormat::Csv));
    std::vector<double> grid;
    std::vector<double> boundary;
    for (const CsvRow& r : rows) {
        if (r.curve == "boundary") {
            grid.push_back(r.x);
            boundary.push_back(r.y);
        }
    }
    REQUIRE(grid.size() > 50);

    std::vector<std::vector<double>> layers(8);
    for (const CsvRow& r : rows) {
        if (r.curve.rfind("pile-", 0) == 0) {
            const int k = std::stoi(r.curve.substr(5));
            REQUIRE(k >= 1);
            REQUIRE(k <= 8);
            layers[k - 1].push_back(r.y);
        }
    }
    for (const auto& layer : layers) REQUIRE(layer.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (int k = 0; k < 8; ++k) {
            CHECK(layers[k][i] < boundary[i]);
            if (k > 0) CHECK(layers[k][i] > layers[k - 1][i]);
        }
    }
}

// Everything the page needs must be inline: no fetches besides the SVG
// namespace identifier, which is a name, not a URL that gets resolved.
bool self_contained(std::string svg) {
    const std::string ns = "xmlns=\"http://www.w3.org/2000/svg\"";
    for (auto at = svg.find(ns); at != std::string::npos; at = svg.find(ns)) {
        svg.erase(at, ns.size());
    }
    return svg.find("http") == std::string::npos;
}

TEST_CASE("SVG output is self-contained and labeled") {
    const std::string amoeba = render_figure(Figure::Amoeba, FigureFormat::Svg);
    CHECK(amoeba.rfind("<svg", 0) == 0);
    CHECK(amoeba.find("</svg>") != std::string::npos);
    CHECK(amoeba.find("polyline") != std::string::npos);
    CHECK(self_contained(amoeba));

    const std::string sub = render_figure(Figure::Subdivision, FigureFormat::Svg);
    for (const char* label : {"U0", "U1", "U2", "T0", "T1", "T2"}) {
        CHECK(sub.find(label) != std::string::npos);
    }
    const std::string st = render_figure(Figure::RegionsST, FigureFormat::Svg);
    CHECK(st.find(">T<") != std::string::npos);
    CHECK(st.find(">S<") != std::string::npos);
}

TEST_CASE("render_figure_to_file writes files and surfaces IO failures") {
    const auto dir = std::filesystem::temp_directory_path() / "baselgeo_fig_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "amoeba.csv";
    render_figure_to_file(Figure::Amoeba, FigureFormat::Csv, path);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == render_figure(Figure::Amoeba, FigureFormat::Csv));
    std::filesystem::remove_all(dir);

    CHECK_THROWS_AS(render_figure_to_file(Figure::Amoeba, FigureFormat::Svg,
                                          "/nonexistent-dir-zz/out.svg"),
                    IoError);
}
