#pragma once

#include <string>

#include "workbench/burling.hpp"
#include "workbench/cbu.hpp"

namespace wb {

/// Deterministic SVG. Frames draw as unfilled rectangle outlines, boxes as
/// translucent filled rectangles, both with id labels; the viewport is the
/// bounding box plus a 5% margin. Coordinates are rendered as exact decimal
/// strings (integer arithmetic only). 2-D input required.
std::string frames_to_svg(const FrameFamily& f);
std::string boxes_to_svg(const BoxFamily& b);

}  // namespace wb
