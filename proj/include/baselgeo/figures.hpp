#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace baselgeo {

enum class Figure {
    RegionsST,   // angular region beside the side-length region
    Amoeba,      // log-side region with its three tentacles
    Subdivision, // three-fold pieces of both the angular and log-side regions
    Pile,        // partial-sum layers converging to the boundary arc
};

enum class FigureFormat { Svg, Csv };

// Registered figure names, in declaration order.
const std::vector<std::string>& figure_names();

// Parses a figure name; UnknownFigure if not registered.
Figure figure_from_name(const std::string& name);

// One sampled polyline of a figure.
struct Curve {
    std::string name;
    std::vector<std::array<double, 2>> points;
};

// The sampled geometry behind a figure.  Tentacles and rays are truncated to
// the documented windows; grids are deterministic.
std::vector<Curve> figure_curves(Figure which);

// Renders to a string: self-contained SVG, or CSV with header "curve,x,y"
// and full-precision coordinates.
std::string render_figure(Figure which, FigureFormat format);

// Renders to a file; IoError if the file cannot be written.
void render_figure_to_file(Figure which, FigureFormat format,
                           const std::filesystem::path& out);

} // namespace baselgeo
