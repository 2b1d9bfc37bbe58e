#pragma once

#include <string>
#include <vector>

namespace debtlab {

// Layered SVG plot emitter. Coordinates are data-space; the emitter maps
// them into a fixed viewport with margins. Output bytes are deterministic
// for a fixed layer set.
struct PlotPoint {
    double x = 0.0, y = 0.0;
    std::string label;
};

struct PlotLayer {
    enum class Kind { line, polygon, points, arrows, bars } kind = Kind::line;
    std::vector<PlotPoint> data; // arrows consume pairs (from, to)
    std::string color = "#1f6feb";
    std::string label;
};

struct Plot {
    std::string title;
    std::string x_label, y_label;
    std::vector<PlotLayer> layers;

    std::string to_svg(int width = 760, int height = 520) const;
};

} // namespace debtlab
