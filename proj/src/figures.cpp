#include "baselgeo/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>

#include "baselgeo/analysis.hpp"
#include "baselgeo/errors.hpp"
#include "baselgeo/regions.hpp"

namespace baselgeo {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> linear_grid(double lo, double hi, int count) {
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        out.push_back(lo + (hi - lo) * (static_cast<double>(i) / (count - 1)));
    }
    return out;
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
    std::vector<double> out;
    out.reserve(count);
    const double ratio = hi / lo;
    for (int i = 0; i < count; ++i) {
        out.push_back(lo * std::pow(ratio, static_cast<double>(i) / (count - 1)));
    }
    return out;
}

Curve t_outline() {
    Curve c{"T-outline", {}};
    for (double t : linear_grid(0.0, pi, 40)) c.points.push_back({t, 0.0});
    for (double t : linear_grid(0.0, pi, 40)) c.points.push_back({pi - t, t});
    for (double t : linear_grid(pi, 0.0, 40)) c.points.push_back({0.0, t});
    return c;
}

Curve s_boundary() {
    Curve c{"S-boundary", {}};
    for (double b : linear_grid(6.0, 0.0, 30)) c.points.push_back({1.0 + b, b});
    for (double a : linear_grid(1.0, 0.0, 20)) c.points.push_back({a, 1.0 - a});
    for (double a : linear_grid(0.0, 6.0, 30)) c.points.push_back({a, 1.0 + a});
    return c;
}

Curve arc_upper() {
    std::vector<double> grid = geometric_grid(amoeba_boundary_height(6.0), 6.0, 200);
    grid.push_back(std::log(2.0));
    std::sort(grid.begin(), grid.end());
    Curve c{"arc-upper", {}};
    for (double x : grid) c.points.push_back({x, amoeba_boundary_height(x)});
    return c;
}

Curve arc_left() {
    Curve c{"arc-left", {}};
    for (double y : linear_grid(6.0, -std::log(std::expm1(6.0)), 150)) {
        c.points.push_back({-std::log1p(std::exp(-y)), y});
    }
    return c;
}

Curve arc_lower() {
    Curve c{"arc-lower", {}};
    for (double x : linear_grid(-std::log(std::expm1(6.0)), 6.0, 150)) {
        c.points.push_back({x, -std::log1p(std::exp(-x))});
    }
    return c;
}

// Half-line from the angular region's center toward (leg_x, leg_y) away from it.
Curve median(const char* name, double leg_x, double leg_y) {
    Curve c{name, {}};
    const double base = pi / 3.0;
    for (double s : linear_grid(0.0, 1.0, 30)) {
        if (leg_x == leg_y) {
            const double v = base + s * leg_x;
            c.points.push_back({v, v});
        } else {
            c.points.push_back({base + s * leg_x, base + s * leg_y});
        }
    }
    return c;
}

Curve ray(const char* name, double dir_x, double dir_y) {
    Curve c{name, {}};
    for (double t : linear_grid(0.0, 6.0, 40)) c.points.push_back({dir_x * t, dir_y * t});
    return c;
}

std::vector<Curve> pile_curves() {
    const std::vector<double> grid = geometric_grid(1e-3, 3.5, 120);
    std::vector<Curve> out;
    Curve b{"boundary", {}};
    for (double x : grid) b.points.push_back({x, amoeba_boundary_height(x)});
    out.push_back(std::move(b));
    for (int k = 1; k <= 8; ++k) {
        Curve layer{"pile-" + std::to_string(k), {}};
        for (double x : grid) layer.points.push_back({x, pile_height(x, k)});
        out.push_back(std::move(layer));
    }
    return out;
}

std::string render_csv(const std::vector<Curve>& curves) {
    std::string out = "curve,x,y\n";
    char buf[160];
    for (const Curve& c : curves) {
        for (const auto& p : c.points) {
            std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g\n", c.name.c_str(), p[0], p[1]);
            out += buf;
        }
    }
    return out;
}

struct Bounds {
    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void grow(const std::array<double, 2>& p) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    }

    void pad() {
        const double dx = std::max(max_x - min_x, 1e-9);
        const double dy = std::max(max_y - min_y, 1e-9);
        min_x -= 0.08 * dx;
        max_x += 0.08 * dx;
        min_y -= 0.08 * dy;
        max_y += 0.08 * dy;
    }
};

struct Viewport {
    double px0, px1, py0, py1;
    Bounds box;

    double map_x(double x) const {
        return px0 + (x - box.min_x) / (box.max_x - box.min_x) * (px1 - px0);
    }
    // Data y grows upward, pixel y downward.
    double map_y(double y) const {
        return py1 - (y - box.min_y) / (box.max_y - box.min_y) * (py1 - py0);
    }
};

int panel_of(Figure which, const std::string& name) {
    if (which == Figure::RegionsST) return name == "T-outline" ? 0 : 1;
    if (which == Figure::Subdivision) return name.rfind("median-", 0) == 0 ? 0 : 1;
    return 0;
}

struct Label {
    int panel;
    double x, y;
    const char* text;
};

std::vector<Label> labels_of(Figure which) {
    switch (which) {
    case Figure::RegionsST:
        return {{0, 0.55, 0.55, "T"}, {1, 2.0, 1.6, "S"}};
    case Figure::Subdivision:
        return {{0, 0.45, 0.45, "T0"}, {0, 1.9, 0.4, "T1"}, {0, 0.4, 1.9, "T2"},
                {1, 0.25, 0.25, "U0"}, {1, -1.5, -1.4, "U1"}, {1, -1.4, -1.5, "U2"}};
    case Figure::Amoeba:
    case Figure::Pile:
        return {};
    }
    return {};
}

const char* caption_of(Figure which) {
    switch (which) {
    case Figure::Amoeba: return "log-side region boundary; tentacles truncated at 6";
    case Figure::Pile: return "partial-sum layers k = 1..8 under the boundary arc";
    case Figure::RegionsST:
    case Figure::Subdivision: return nullptr;
    }
    return nullptr;
}

void append_fmt(std::string& out, const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out += buf;
}

std::string render_svg(Figure which) {
    const auto curves = figure_curves(which);
    const int panels =
        (which == Figure::RegionsST || which == Figure::Subdivision) ? 2 : 1;

    std::vector<Bounds> box(panels);
    for (const Curve& c : curves) {
        Bounds& b = box[panel_of(which, c.name)];
        for (const auto& p : c.points) b.grow(p);
    }
    std::vector<Viewport> view;
    for (int i = 0; i < panels; ++i) {
        box[i].pad();
        const double px0 = panels == 1 ? 44.0 : (i == 0 ? 44.0 : 346.0);
        const double px1 = panels == 1 ? 612.0 : (i == 0 ? 310.0 : 612.0);
        view.push_back({px0, px1, 24.0, 396.0, box[i]});
    }

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
                                     "#bcbd22"};
    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
        "viewBox=\"0 0 640 420\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"420\" fill=\"#ffffff\"/>\n";

    for (const Viewport& v : view) {
        if (v.box.min_x < 0.0 && v.box.max_x > 0.0) {
            append_fmt(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                            "stroke=\"#d8d8d8\" stroke-width=\"1\"/>\n",
                       v.map_x(0.0), v.py0, v.map_x(0.0), v.py1);
        }
        if (v.box.min_y < 0.0 && v.box.max_y > 0.0) {
            append_fmt(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                            "stroke=\"#d8d8d8\" stroke-width=\"1\"/>\n",
                       v.px0, v.map_y(0.0), v.px1, v.map_y(0.0));
        }
    }

    int color = 0;
    for (const Curve& c : curves) {
        const Viewport& v = view[panel_of(which, c.name)];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += kPalette[color++ % std::size(kPalette)];
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (const auto& p : c.points) {
            append_fmt(svg, "%.2f,%.2f ", v.map_x(p[0]), v.map_y(p[1]));
        }
        svg += "\"/>\n";
    }

    for (const Label& l : labels_of(which)) {
        const Viewport& v = view[l.panel];
        append_fmt(svg, "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" "
                        "font-size=\"13\" fill=\"#202020\">%s</text>\n",
                   v.map_x(l.x), v.map_y(l.y), l.text);
    }
    if (const char* caption = caption_of(which)) {
        append_fmt(svg, "<text x=\"10\" y=\"16\" font-family=\"sans-serif\" "
                        "font-size=\"12\" fill=\"#404040\">%s</text>\n",
                   caption);
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"regions-ST", "amoeba", "subdivision",
                                                   "pile"};
    return names;
}

Figure figure_from_name(const std::string& name) {
    if (name == "regions-ST") return Figure::RegionsST;
    if (name == "amoeba") return Figure::Amoeba;
    if (name == "subdivision") return Figure::Subdivision;
    if (name == "pile") return Figure::Pile;
    throw UnknownFigure("no figure named '" + name + "'");
}

std::vector<Curve> figure_curves(Figure which) {
    switch (which) {
    case Figure::RegionsST:
        return {t_outline(), s_boundary()};
    case Figure::Amoeba:
        return {arc_upper(), arc_left(), arc_lower()};
    case Figure::Subdivision:
        return {median("median-equal-legs", pi / 2.0 - pi / 3.0, pi / 2.0 - pi / 3.0),
                median("median-gamma-alpha", pi / 2.0 - pi / 3.0, -pi / 3.0),
                median("median-gamma-beta", -pi / 3.0, pi / 2.0 - pi / 3.0),
                ray("asymptote-vertical", 0.0, 1.0),
                ray("asymptote-horizontal", 1.0, 0.0),
                ray("asymptote-diagonal", -1.0, -1.0)};
    case Figure::Pile:
        return pile_curves();
    }
    throw UnknownFigure("unregistered figure");
}

std::string render_figure(Figure which, FigureFormat format) {
    if (format == FigureFormat::Csv) return render_csv(figure_curves(which));
    return render_svg(which);
}

void render_figure_to_file(Figure which, FigureFormat format,
                           const std::filesystem::path& out) {
    const std::string text = render_figure(which, format);
    std::ofstream file(out, std::ios::binary);
    if (!file) throw IoError("cannot open '" + out.string() + "' for writing");
    file << text;
    file.flush();
    if (!file.good()) throw IoError("write to '" + out.string() + "' failed");
}

} // namespace baselgeo
