#include "flipdist/instance.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace flipdist {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InstanceInvalid: return "InstanceInvalid";
        case ErrorKind::NotATriangulation: return "NotATriangulation";
        case ErrorKind::EdgeNotInTriangulation: return "EdgeNotInTriangulation";
        case ErrorKind::NotFlippable: return "NotFlippable";
        case ErrorKind::InstanceMismatch: return "InstanceMismatch";
        case ErrorKind::QuadNotInTriangulation: return "QuadNotInTriangulation";
        case ErrorKind::SegmentOutsideRegion: return "SegmentOutsideRegion";
        case ErrorKind::AlreadyEqual: return "AlreadyEqual";
        case ErrorKind::LemmaViolation: return "LemmaViolation";
        case ErrorKind::GraphTooLarge: return "GraphTooLarge";
        case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

std::size_t Instance::n_border() const {
    std::size_t total = 0;
    for (const auto& poly : border) total += poly.size();
    return total;
}

std::vector<Polygon> Instance::border_polygons() const {
    std::vector<Polygon> out;
    out.reserve(border.size());
    for (const auto& poly : border) {
        Polygon p;
        p.reserve(poly.size());
        for (VertexId id : poly) p.push_back(points[id]);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Edge> Instance::border_edges() const {
    std::vector<Edge> edges;
    for (const auto& poly : border) {
        for (std::size_t i = 0; i < poly.size(); ++i) edges.emplace_back(poly[i], poly[(i + 1) % poly.size()]);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

std::string polygon_name(std::size_t k) { return k == 0 ? "outer border" : "hole " + std::to_string(k); }

}  // namespace

std::vector<std::string> instance_violations(const Instance& inst) {
    std::vector<std::string> out;
    const std::size_t n = inst.points.size();

    for (std::size_t i = 0; i < n; ++i) {
        if (!within_coord_limit(inst.points[i])) {
            out.push_back("point " + std::to_string(i) + " exceeds the coordinate bound 2^30");
        }
    }
    {
        std::vector<std::pair<Point, std::size_t>> sorted;
        for (std::size_t i = 0; i < n; ++i) sorted.emplace_back(inst.points[i], i);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i].first == sorted[i - 1].first) {
                out.push_back("points " + std::to_string(sorted[i - 1].second) + " and " +
                              std::to_string(sorted[i].second) + " coincide");
            }
        }
    }
    if (inst.border.empty()) {
        out.push_back("no outer border polygon");
        return out;
    }
    bool ids_ok = true;
    for (std::size_t k = 0; k < inst.border.size(); ++k) {
        const auto& poly = inst.border[k];
        if (poly.size() < 3) out.push_back(polygon_name(k) + " has fewer than 3 vertices");
        std::set<VertexId> seen;
        for (VertexId id : poly) {
            if (id >= n) {
                out.push_back(polygon_name(k) + " references missing point " + std::to_string(id));
                ids_ok = false;
            } else if (!seen.insert(id).second) {
                out.push_back(polygon_name(k) + " repeats vertex " + std::to_string(id));
            }
        }
    }
    if (!ids_ok || !out.empty()) return out;

    // Border edges, tagged with their polygon.
    struct Tagged {
        Edge e;
        std::size_t poly;
    };
    std::vector<Tagged> edges;
    for (std::size_t k = 0; k < inst.border.size(); ++k) {
        const auto& poly = inst.border[k];
        for (std::size_t i = 0; i < poly.size(); ++i) edges.push_back({Edge(poly[i], poly[(i + 1) % poly.size()]), k});
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& a = edges[i].e;
            const Edge& b = edges[j].e;
            if (a == b) {
                out.push_back("border edge " + to_string(a) + " appears twice");
            } else if (properly_intersect(inst.segment(a), inst.segment(b))) {
                out.push_back("border edges " + to_string(a) + " and " + to_string(b) + " cross");
            }
        }
    }
    for (const Tagged& t : edges) {
        for (std::size_t p = 0; p < n; ++p) {
            if (point_on_open_segment(inst.points[p], inst.segment(t.e))) {
                out.push_back("point " + std::to_string(p) + " lies on border edge " + to_string(t.e));
            }
        }
    }
    if (!out.empty()) return out;

    const auto polys = inst.border_polygons();
    for (std::size_t k = 0; k < polys.size(); ++k) {
        if (polygon_area2(polys[k]) == 0) out.push_back(polygon_name(k) + " has zero area");
    }
    const std::span<const Polygon> outer(polys.data(), 1);
    for (std::size_t p = 0; p < n; ++p) {
        const Location loc = point_in_region(inst.points[p], outer);
        if (loc == Location::outside) out.push_back("point " + std::to_string(p) + " lies outside the outer border");
        for (std::size_t k = 1; k < polys.size(); ++k) {
            const std::span<const Polygon> hole(&polys[k], 1);
            if (point_in_region(inst.points[p], hole) == Location::inside) {
                out.push_back("point " + std::to_string(p) + " lies inside hole " + std::to_string(k));
            }
        }
    }
    // Edge midpoints catch holes whose vertices all sit on another polygon's boundary.
    for (const Tagged& t : edges) {
        const Point& a = inst.points[t.e.u];
        const Point& b = inst.points[t.e.v];
        const Point mid2{a.x + b.x, a.y + b.y};
        if (t.poly != 0 && point_in_region_scaled(mid2, 2, outer) == Location::outside) {
            out.push_back("hole " + std::to_string(t.poly) + " leaves the outer border");
        }
        for (std::size_t k = 1; k < polys.size(); ++k) {
            if (k == t.poly) continue;
            const std::span<const Polygon> hole(&polys[k], 1);
            if (point_in_region_scaled(mid2, 2, hole) == Location::inside) {
                out.push_back(polygon_name(t.poly) + " overlaps hole " + std::to_string(k));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void require_valid_instance(const Instance& inst) {
    const auto v = instance_violations(inst);
    if (v.empty()) return;
    std::ostringstream msg;
    for (std::size_t i = 0; i < v.size(); ++i) msg << (i ? "; " : "") << v[i];
    throw Error(ErrorKind::InstanceInvalid, msg.str());
}

bool is_pinched(const Instance& inst) {
    std::set<VertexId> seen;
    for (const auto& poly : inst.border) {
        for (VertexId id : poly) {
            if (!seen.insert(id).second) return true;
        }
    }
    return false;
}

RegionIndex::RegionIndex(const Instance& inst)
    : inst_(&inst), polygons_(inst.border_polygons()), border_edges_(inst.border_edges()) {}

bool RegionIndex::is_border_edge(const Edge& e) const {
    return std::binary_search(border_edges_.begin(), border_edges_.end(), e);
}

bool RegionIndex::admissible(const Edge& e) const {
    if (e.u == e.v) return false;
    if (is_border_edge(e)) return true;
    const Segment s = inst_->segment(e);
    for (std::size_t p = 0; p < inst_->points.size(); ++p) {
        if (point_on_open_segment(inst_->points[p], s)) return false;
    }
    for (const auto& poly : polygons_) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (properly_intersect(s, {poly[i], poly[(i + 1) % poly.size()]})) return false;
        }
    }
    // The open segment now meets the border nowhere, so one interior point decides.
    const Point mid2{s.a.x + s.b.x, s.a.y + s.b.y};
    return point_in_region_scaled(mid2, 2, polygons_) == Location::inside;
}

std::vector<Edge> RegionIndex::admissible_edges() const {
    std::vector<Edge> out;
    const auto n = static_cast<VertexId>(inst_->points.size());
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (admissible(Edge(i, j))) out.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace flipdist
