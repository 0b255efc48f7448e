#include "hausdim/render.hpp"

#include <algorithm>
#include <sstream>

#include "hausdim/errors.hpp"
#include "hausdim/format.hpp"

namespace hausdim {

namespace {

constexpr double kMargin = 10.0;
constexpr double kBarHeight = 20.0;
constexpr double kRowGap = 14.0;

std::string num(double x) { return format_shortest(x); }

void open_svg(std::ostringstream& svg, double width, double height) {
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" fill=\"white\"/>\n";
}

std::string render_line(const Ifs& ifs, std::size_t depth) {
    const AxisBox& seed = ifs.seed_box();
    const double scale = kCanvasWidth / seed.extent(0);
    const double height = 2.0 * kMargin + static_cast<double>(depth + 1) * kBarHeight +
                          static_cast<double>(depth) * kRowGap;
    std::ostringstream svg;
    open_svg(svg, kCanvasWidth + 2.0 * kMargin, height);
    for (std::size_t k = 0; k <= depth; ++k) {
        const double y = kMargin + static_cast<double>(k) * (kBarHeight + kRowGap);
        svg << "<g class=\"stage\" data-depth=\"" << k << "\" fill=\"black\">\n";
        for (const auto& cell : refine(ifs, k).cells) {
            svg << "<rect x=\"" << num(kMargin + (cell.box.lo(0) - seed.lo(0)) * scale)
                << "\" y=\"" << num(y) << "\" width=\"" << num(cell.box.extent(0) * scale)
                << "\" height=\"" << num(kBarHeight) << "\"/>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_plane(const Ifs& ifs, std::size_t depth) {
    const AxisBox& seed = ifs.seed_box();
    const double scale = kCanvasWidth / std::max(seed.extent(0), seed.extent(1));
    const double width = seed.extent(0) * scale + 2.0 * kMargin;
    const double height = seed.extent(1) * scale + 2.0 * kMargin;
    std::ostringstream svg;
    open_svg(svg, width, height);
    for (std::size_t k = 0; k <= depth; ++k) {
        const double stroke = std::max(0.25, 2.0 / static_cast<double>(k + 1));
        svg << "<g class=\"stage\" data-depth=\"" << k
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\">\n";
        for (const auto& cell : refine(ifs, k).cells) {
            const auto& b = cell.box;
            // SVG y grows downward.
            svg << "<rect x=\"" << num(kMargin + (b.lo(0) - seed.lo(0)) * scale) << "\" y=\""
                << num(kMargin + (seed.hi(1) - b.hi(1)) * scale) << "\" width=\""
                << num(b.extent(0) * scale) << "\" height=\"" << num(b.extent(1) * scale)
                << "\"/>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string render_svg(const Ifs& ifs, std::size_t depth) {
    const std::size_t cap = ifs.dim() == 1 ? kMaxRenderDepth1D : kMaxRenderDepth2D;
    if (depth > cap) {
        throw CapExceeded("render depth " + std::to_string(depth) + " exceeds the limit of " +
                          std::to_string(cap) + " for " + std::to_string(ifs.dim()) + "-D systems");
    }
    return ifs.dim() == 1 ? render_line(ifs, depth) : render_plane(ifs, depth);
}

}  // namespace hausdim
