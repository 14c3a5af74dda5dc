#include "flipdist/geometry.hpp"

#include <algorithm>

namespace flipdist {

namespace {

int sign(Wide v) { return (v > 0) - (v < 0); }

Wide cross(Coord ux, Coord uy, Coord vx, Coord vy) {
    return static_cast<Wide>(ux) * vy - static_cast<Wide>(uy) * vx;
}

// Parity of crossings of the rightward ray from p with the polygon, using the half-open
// rule on y. This is the ray shifted upward by an infinitesimal, so vertices at p.y
// never produce double counts. p must not lie on the polygon boundary.
bool strictly_inside_polygon(const Point& p, std::span<const Point> poly) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& u = poly[i];
        const Point& v = poly[(i + 1) % n];
        const bool u_above = u.y > p.y;
        const bool v_above = v.y > p.y;
        if (u_above == v_above) continue;
        const int o = orient(u, v, p);
        if ((v.y > u.y && o > 0) || (v.y < u.y && o < 0)) inside = !inside;
    }
    return inside;
}

Point scale(const Point& p, Coord k) { return {p.x * k, p.y * k}; }

}  // namespace

Wide orient_det(const Point& p, const Point& q, const Point& r) {
    return cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y);
}

int orient(const Point& p, const Point& q, const Point& r) { return sign(orient_det(p, q, r)); }

bool properly_intersect(const Segment& s1, const Segment& s2) {
    // Any zero orientation means the only candidate common point is an endpoint of one
    // segment, or the segments are collinear; neither is a proper crossing.
    const int o1 = orient(s1.a, s1.b, s2.a);
    const int o2 = orient(s1.a, s1.b, s2.b);
    if (o1 == 0 || o2 == 0 || o1 == o2) return false;
    const int o3 = orient(s2.a, s2.b, s1.a);
    const int o4 = orient(s2.a, s2.b, s1.b);
    return o3 != 0 && o4 != 0 && o3 != o4;
}

bool point_on_open_segment(const Point& p, const Segment& s) {
    if (p == s.a || p == s.b) return false;
    return point_on_closed_segment(p, s);
}

bool point_on_closed_segment(const Point& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

Location point_in_region_scaled(const Point& num, Coord den, std::span<const Polygon> border) {
    if (border.empty()) return Location::outside;
    std::vector<Point> scaled;
    bool inside = false;
    for (std::size_t k = 0; k < border.size(); ++k) {
        scaled.clear();
        scaled.reserve(border[k].size());
        for (const Point& v : border[k]) scaled.push_back(scale(v, den));
        const std::size_t n = scaled.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (point_on_closed_segment(num, {scaled[i], scaled[(i + 1) % n]})) return Location::on_boundary;
        }
        const bool in_k = strictly_inside_polygon(num, scaled);
        if (k == 0) {
            inside = in_k;
        } else if (in_k) {
            inside = false;
        }
    }
    return inside ? Location::inside : Location::outside;
}

Location point_in_region(const Point& p, std::span<const Polygon> border) {
    return point_in_region_scaled(p, 1, border);
}

Wide polygon_area2(std::span<const Point> poly) {
    Wide area = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& u = poly[i];
        const Point& v = poly[(i + 1) % n];
        area += static_cast<Wide>(u.x) * v.y - static_cast<Wide>(u.y) * v.x;
    }
    return area;
}

int compare_crossings_along(const Segment& base, const Segment& cut1, const Segment& cut2) {
    // Crossing parameter t = num / den with 0 < t < 1 along base.
    auto param = [&](const Segment& cut) {
        const Coord dx = cut.b.x - cut.a.x;
        const Coord dy = cut.b.y - cut.a.y;
        Wide num = cross(cut.a.x - base.a.x, cut.a.y - base.a.y, dx, dy);
        Wide den = cross(base.b.x - base.a.x, base.b.y - base.a.y, dx, dy);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return std::pair{num, den};
    };
    const auto [n1, d1] = param(cut1);
    const auto [n2, d2] = param(cut2);
    return sign(n1 * d2 - n2 * d1);
}

bool angle_less(const Point& u, const Point& v) {
    auto half = [](const Point& w) { return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1; };
    const int hu = half(u);
    const int hv = half(v);
    if (hu != hv) return hu < hv;
    return cross(u.x, u.y, v.x, v.y) > 0;
}

}  // namespace flipdist
