#include "flipdist/generate.hpp"

#include "flipdist/error.hpp"
#include "flipdist/random.hpp"

#include <cmath>
#include <numbers>

namespace flipdist {

std::string_view to_string(Shape shape) {
    switch (shape) {
        case Shape::convex_gon: return "convex_gon";
        case Shape::random_simple_border: return "random_simple_border";
        case Shape::with_holes: return "with_holes";
    }
    return "?";
}

namespace {

constexpr int kAttempts = 200;
constexpr int kPointTries = 10000;
constexpr Coord kCell = 200;
constexpr Coord kCellMargin = 30;

[[noreturn]] void infeasible(const GenSpec& spec, const std::string& why) {
    throw Error(ErrorKind::InfeasibleSpec, std::string(to_string(spec.shape)) + " with " +
                                               std::to_string(spec.n_points) + " points: " + why);
}

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Point polar(double radius, double angle) {
    return {static_cast<Coord>(std::llround(radius * std::cos(angle))),
            static_cast<Coord>(std::llround(radius * std::sin(angle)))};
}

// Angles increasing around the origin; gaps stay within (1 - jitter, 1 + jitter) of even.
std::vector<double> jittered_angles(Rng& rng, std::size_t m, double jitter) {
    const double step = 2 * std::numbers::pi / static_cast<double>(m);
    const double start = unit(rng) * step;
    std::vector<double> out;
    for (std::size_t i = 0; i < m; ++i) {
        out.push_back(start + step * (static_cast<double>(i) + (unit(rng) - 0.5) * jitter));
    }
    return out;
}

bool collinear_with_any(const std::vector<Point>& pts, const Point& p) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == p) return true;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (orient(pts[i], pts[j], p) == 0) return true;
        }
    }
    return false;
}

bool has_collinear_triple(const std::vector<Point>& pts) {
    for (std::size_t k = 2; k < pts.size(); ++k) {
        if (collinear_with_any(std::vector<Point>(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k)), pts[k])) {
            return true;
        }
    }
    return false;
}

std::vector<Point> outer_border(const GenSpec& spec, Rng& rng, std::size_t m) {
    std::vector<Point> out;
    switch (spec.shape) {
        case Shape::convex_gon:
            for (std::size_t i = 0; i < m; ++i) {
                out.push_back(polar(kGenRadius, 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m)));
            }
            break;
        case Shape::random_simple_border:
            for (double a : jittered_angles(rng, m, 0.9)) out.push_back(polar(kGenRadius * (0.3 + 0.7 * unit(rng)), a));
            break;
        case Shape::with_holes:
            for (double a : jittered_angles(rng, m, 0.3)) out.push_back(polar(kGenRadius, a));
            break;
    }
    return out;
}

std::optional<Instance> attempt(const GenSpec& spec, Rng& rng, std::size_t m) {
    Instance inst;
    inst.points = outer_border(spec, rng, m);
    if (has_collinear_triple(inst.points)) return std::nullopt;
    inst.border.emplace_back();
    for (VertexId i = 0; i < m; ++i) inst.border[0].push_back(i);
    if (polygon_area2(inst.border_polygons()[0]) < 0) return std::nullopt;

    if (spec.shape == Shape::with_holes) {
        std::vector<int> cells{0, 1, 2, 3, 4, 5, 6, 7, 8};
        for (std::size_t i = cells.size(); i > 1; --i) std::swap(cells[i - 1], cells[bounded(rng, i)]);
        for (std::size_t h = 0; h < spec.holes; ++h) {
            const Coord x0 = -3 * kCell / 2 + kCell * (cells[h] % 3) + kCellMargin;
            const Coord y0 = -3 * kCell / 2 + kCell * (cells[h] / 3) + kCellMargin;
            const Coord span = kCell - 2 * kCellMargin;
            std::vector<Point> tri;
            for (int tries = 0; tri.size() < 3 && tries < kPointTries; ++tries) {
                const Point p{x0 + uniform_int(rng, 0, span), y0 + uniform_int(rng, 0, span)};
                std::vector<Point> all = inst.points;
                all.insert(all.end(), tri.begin(), tri.end());
                if (collinear_with_any(all, p)) continue;
                if (tri.size() == 2) {
                    const Wide area = orient_det(tri[0], tri[1], p);
                    if ((area < 0 ? -area : area) < span * span / 4) continue;
                }
                tri.push_back(p);
            }
            if (tri.size() < 3) return std::nullopt;
            std::vector<VertexId> poly;
            for (const Point& p : tri) {
                poly.push_back(static_cast<VertexId>(inst.points.size()));
                inst.points.push_back(p);
            }
            inst.border.push_back(std::move(poly));
        }
    }

    const auto polys = inst.border_polygons();
    Coord min_x = inst.points[0].x, max_x = min_x, min_y = inst.points[0].y, max_y = min_y;
    for (const Point& p : inst.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    for (std::size_t k = 0; k < spec.interior_points; ++k) {
        bool placed = false;
        for (int tries = 0; !placed && tries < kPointTries; ++tries) {
            const Point p{uniform_int(rng, min_x, max_x), uniform_int(rng, min_y, max_y)};
            if (point_in_region(p, polys) != Location::inside || collinear_with_any(inst.points, p)) continue;
            inst.points.push_back(p);
            placed = true;
        }
        if (!placed) return std::nullopt;
    }
    if (!instance_violations(inst).empty()) return std::nullopt;
    return inst;
}

}  // namespace

Instance generate_instance(const GenSpec& spec) {
    const std::size_t holes = spec.shape == Shape::with_holes ? spec.holes : 0;
    if (spec.shape != Shape::with_holes && spec.holes != 0) infeasible(spec, "holes need the with_holes shape");
    if (holes > kMaxGenHoles) infeasible(spec, "at most " + std::to_string(kMaxGenHoles) + " holes fit the grid");
    const std::size_t reserved = 3 * holes + spec.interior_points;
    if (spec.n_points < reserved + 3) {
        infeasible(spec, "needs at least " + std::to_string(reserved + 3) + " points for 3 outer vertices, " +
                             std::to_string(holes) + " triangular holes and " + std::to_string(spec.interior_points) +
                             " interior points");
    }
    if (spec.n_points > 100000) infeasible(spec, "too many points");
    Rng rng(spec.seed);
    for (int i = 0; i < kAttempts; ++i) {
        if (auto inst = attempt(spec, rng, spec.n_points - reserved)) return std::move(*inst);
        if (spec.shape == Shape::convex_gon && spec.interior_points == 0) break;
    }
    infeasible(spec, "no valid instance found after " + std::to_string(kAttempts) + " attempts");
}

std::pair<Triangulation, Triangulation> generate_pair(const GenSpec& spec, std::uint64_t seed2) {
    const auto inst = std::make_shared<const Instance>(generate_instance(spec));
    Rng rng(seed2);
    const std::uint64_t s1 = rng();
    const std::uint64_t s2 = rng();
    return {greedy_triangulate(inst, Priority::random(s1)), greedy_triangulate(inst, Priority::random(s2))};
}

}  // namespace flipdist
