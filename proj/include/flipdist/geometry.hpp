#pragma once

// Exact integer predicates. Coordinates are bounded by 2^30 in magnitude, so every
// determinant below is evaluated without overflow in 128-bit intermediates.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace flipdist {

using Coord = std::int64_t;
__extension__ typedef __int128 Wide;

inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

struct Segment {
    Point a;
    Point b;
};

/// A closed polygon given by its vertices in order; the closing edge is implicit.
using Polygon = std::vector<Point>;

enum class Location { inside, on_boundary, outside };

constexpr bool within_coord_limit(const Point& p) {
    return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit && p.y <= kCoordLimit;
}

/// Twice the signed area of (p, q, r), exactly.
Wide orient_det(const Point& p, const Point& q, const Point& r);

/// +1 for a counter-clockwise turn, -1 for clockwise, 0 for collinear.
int orient(const Point& p, const Point& q, const Point& r);

/// True iff the open segments share exactly one point. Shared endpoints, touching
/// and collinear overlap all answer false.
bool properly_intersect(const Segment& s1, const Segment& s2);

bool point_on_open_segment(const Point& p, const Segment& s);
bool point_on_closed_segment(const Point& p, const Segment& s);

/// Classifies p against (interior of border[0]) minus the closed holes border[1..].
/// Points on any border edge are on_boundary.
Location point_in_region(const Point& p, std::span<const Polygon> border);

/// Same as point_in_region for the point (num.x / den, num.y / den), den in {1,2,3,...}.
/// Used for midpoints and centroids without leaving integer arithmetic.
Location point_in_region_scaled(const Point& num, Coord den, std::span<const Polygon> border);

/// Signed area times two of a polygon (positive when counter-clockwise).
Wide polygon_area2(std::span<const Point> poly);

/// Compares the positions of the crossings of `cut1` and `cut2` along `base`, measured
/// from base.a. All three must be proper crossings of `base`. Returns <0, 0, >0.
int compare_crossings_along(const Segment& base, const Segment& cut1, const Segment& cut2);

/// Counter-clockwise angular order of direction vectors around the origin, starting at
/// the positive x axis. Exact; returns true if `u` comes strictly before `v`.
bool angle_less(const Point& u, const Point& v);

}  // namespace flipdist
