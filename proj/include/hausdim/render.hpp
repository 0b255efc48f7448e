#pragma once

#include <cstddef>
#include <string>

#include "hausdim/ifs.hpp"

namespace hausdim {

inline constexpr std::size_t kMaxRenderDepth1D = 12;
inline constexpr std::size_t kMaxRenderDepth2D = 6;

/// Canvas width in SVG user units; 1-D bars span this width at stage 0.
inline constexpr double kCanvasWidth = 810.0;

/// SVG of construction stages 0..depth.
///
/// 1-D systems draw one row of filled bars per stage; 2-D systems draw the
/// outlines of every stage's cells on one canvas. Each stage is a
/// <g class="stage" data-depth="k"> group. Output is byte-deterministic.
std::string render_svg(const Ifs& ifs, std::size_t depth);

}  // namespace hausdim
