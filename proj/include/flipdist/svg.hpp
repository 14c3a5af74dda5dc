#pragma once

// Deterministic SVG drawings. The instance bounding box is fitted into a 1000x1000
// frame with a 5% margin and the y axis pointing up. Only line, circle and text
// elements are emitted; coordinates are printed with three decimals.

#include "flipdist/morph.hpp"

#include <string>

namespace flipdist {

inline constexpr double kFrameSize = 1000.0;
inline constexpr double kFrameMargin = 50.0;

std::string render_triangulation(const Triangulation& t);

/// t1 in black, t2 in red on top.
std::string render_overlay(const Triangulation& t1, const Triangulation& t2);

/// One frame per state from start to target, side by side. Each frame overlays the
/// target in red and captions the step that produced it.
std::string render_sequence(const FlipSequence& seq);

}  // namespace flipdist
