#include "debtlab/io/svg.hpp"

#include "debtlab/io/table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace debtlab {

namespace {

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void grow(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(hi > lo)) { lo -= 1.0; hi += 1.0; }
        const double m = 0.06 * (hi - lo);
        lo -= m;
        hi += m;
    }
};

std::string fmt(double v) { return format_fixed(v, 2); }

} // namespace

std::string Plot::to_svg(int width, int height) const {
    constexpr int kMargin = 56;
    Range rx, ry;
    for (const auto& layer : layers)
        for (const auto& p : layer.data) {
            rx.grow(p.x);
            ry.grow(p.y);
        }
    rx.pad();
    ry.pad();

    auto sx = [&](double x) {
        return kMargin + (x - rx.lo) / (rx.hi - rx.lo) * (width - 2 * kMargin);
    };
    auto sy = [&](double y) {
        return height - kMargin - (y - ry.lo) / (ry.hi - ry.lo) * (height - 2 * kMargin);
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        s += "<text x=\"" + std::to_string(width / 2) +
             "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" + title + "</text>\n";
    // axes
    s += "<line x1=\"" + fmt(kMargin) + "\" y1=\"" + fmt(height - kMargin) + "\" x2=\"" +
         fmt(width - kMargin) + "\" y2=\"" + fmt(height - kMargin) +
         "\" stroke=\"#333\"/>\n";
    s += "<line x1=\"" + fmt(kMargin) + "\" y1=\"" + fmt(kMargin) + "\" x2=\"" +
         fmt(kMargin) + "\" y2=\"" + fmt(height - kMargin) + "\" stroke=\"#333\"/>\n";
    if (!x_label.empty())
        s += "<text x=\"" + std::to_string(width / 2) + "\" y=\"" +
             std::to_string(height - 12) + "\" text-anchor=\"middle\" font-size=\"12\">" +
             x_label + "</text>\n";
    if (!y_label.empty())
        s += "<text x=\"14\" y=\"" + std::to_string(height / 2) +
             "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 " +
             std::to_string(height / 2) + ")\">" + y_label + "</text>\n";

    for (const auto& layer : layers) {
        switch (layer.kind) {
            case PlotLayer::Kind::line: {
                std::string pts;
                for (const auto& p : layer.data)
                    pts += fmt(sx(p.x)) + "," + fmt(sy(p.y)) + " ";
                s += "<polyline fill=\"none\" stroke=\"" + layer.color +
                     "\" stroke-width=\"1.6\" points=\"" + pts + "\"/>\n";
                break;
            }
            case PlotLayer::Kind::polygon: {
                std::string pts;
                for (const auto& p : layer.data)
                    pts += fmt(sx(p.x)) + "," + fmt(sy(p.y)) + " ";
                s += "<polygon fill=\"" + layer.color +
                     "\" fill-opacity=\"0.25\" stroke=\"none\" points=\"" + pts + "\"/>\n";
                break;
            }
            case PlotLayer::Kind::points: {
                for (const auto& p : layer.data) {
                    s += "<circle cx=\"" + fmt(sx(p.x)) + "\" cy=\"" + fmt(sy(p.y)) +
                         "\" r=\"4\" fill=\"" + layer.color + "\"/>\n";
                    if (!p.label.empty())
                        s += "<text x=\"" + fmt(sx(p.x) + 6) + "\" y=\"" + fmt(sy(p.y) - 6) +
                             "\" font-size=\"11\">" + p.label + "</text>\n";
                }
                break;
            }
            case PlotLayer::Kind::arrows: {
                for (size_t i = 0; i + 1 < layer.data.size(); i += 2) {
                    const auto& a = layer.data[i];
                    const auto& b = layer.data[i + 1];
                    s += "<line x1=\"" + fmt(sx(a.x)) + "\" y1=\"" + fmt(sy(a.y)) +
                         "\" x2=\"" + fmt(sx(b.x)) + "\" y2=\"" + fmt(sy(b.y)) +
                         "\" stroke=\"" + layer.color + "\" stroke-width=\"1.4\"/>\n";
                    const double dx = sx(b.x) - sx(a.x), dy = sy(b.y) - sy(a.y);
                    const double len = std::hypot(dx, dy);
                    if (len > 1e-9) {
                        const double ux = dx / len, uy = dy / len;
                        const double hx = sx(b.x), hy = sy(b.y);
                        s += "<polygon fill=\"" + layer.color + "\" points=\"" + fmt(hx) +
                             "," + fmt(hy) + " " + fmt(hx - 8 * ux + 3 * uy) + "," +
                             fmt(hy - 8 * uy - 3 * ux) + " " + fmt(hx - 8 * ux - 3 * uy) +
                             "," + fmt(hy - 8 * uy + 3 * ux) + "\"/>\n";
                    }
                }
                break;
            }
            case PlotLayer::Kind::bars: {
                const double bw = (width - 2.0 * kMargin) /
                                  std::max<size_t>(1, 2 * layer.data.size());
                for (const auto& p : layer.data) {
                    const double x0 = sx(p.x) - bw / 2;
                    const double y0 = std::min(sy(p.y), sy(0.0));
                    const double h = std::abs(sy(p.y) - sy(0.0));
                    s += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" +
                         fmt(bw) + "\" height=\"" + fmt(h) + "\" fill=\"" + layer.color +
                         "\"/>\n";
                }
                break;
            }
        }
    }
    s += "</svg>\n";
    return s;
}

} // namespace debtlab
