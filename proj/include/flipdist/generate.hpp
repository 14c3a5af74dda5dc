#pragma once

// Seeded instance and triangulation-pair generator for property tests and acceptance
// runs. Points are numbered outer border first, then hole vertices, then interior points.

#include "flipdist/triangulation.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace flipdist {

enum class Shape { convex_gon, random_simple_border, with_holes };

struct GenSpec {
    std::uint64_t seed = 0;
    std::size_t n_points = 0;  // all points: outer border, hole vertices and interior points
    Shape shape = Shape::convex_gon;
    std::size_t holes = 0;  // only for with_holes; every hole is a triangle
    std::size_t interior_points = 0;
};

inline constexpr double kGenRadius = 1000.0;
inline constexpr std::size_t kMaxGenHoles = 9;

std::string_view to_string(Shape shape);

/// convex_gon: regular polygon of radius 1000 rounded to integers, independent of the
/// seed apart from interior points. random_simple_border: star-shaped polygon around
/// the origin. with_holes: random convex outer polygon with `holes` small triangles in
/// distinct cells of a 3x3 grid at the centre. No three points are ever collinear.
/// Throws Error(InfeasibleSpec).
Instance generate_instance(const GenSpec& spec);

/// Two greedy triangulations of generate_instance(spec) with random priorities derived
/// from seed2. They may coincide.
std::pair<Triangulation, Triangulation> generate_pair(const GenSpec& spec, std::uint64_t seed2);

}  // namespace flipdist
