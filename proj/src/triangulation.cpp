#include "flipdist/triangulation.hpp"

#include "flipdist/error.hpp"
#include "flipdist/random.hpp"

#include <algorithm>
#include <limits>

namespace flipdist {

Triangulation::Triangulation(InstancePtr instance, std::vector<Edge> edges)
    : instance_(std::move(instance)), edges_(std::move(edges)) {
    if (!instance_) throw Error(ErrorKind::PreconditionFailed, "triangulation without an instance");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Triangulation::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::size_t Triangulation::index_of(const Edge& e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return (it != edges_.end() && *it == e) ? static_cast<std::size_t>(it - edges_.begin()) : edges_.size();
}

bool same_instance(const Triangulation& a, const Triangulation& b) {
    return a.instance_ptr() == b.instance_ptr() || a.instance() == b.instance();
}

void require_same_instance(const Triangulation& a, const Triangulation& b) {
    if (!same_instance(a, b)) throw Error(ErrorKind::InstanceMismatch, "triangulations reference different instances");
}

bool operator==(const Triangulation& a, const Triangulation& b) { return a.edges_ == b.edges_ && same_instance(a, b); }

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::edge_out_of_range: return "edge-out-of-range";
        case ViolationKind::missing_border_edge: return "missing-border-edge";
        case ViolationKind::crossing_edges: return "crossing-edges";
        case ViolationKind::vertex_on_edge: return "vertex-on-edge";
        case ViolationKind::edge_outside_region: return "edge-outside-region";
        case ViolationKind::not_maximal: return "not-maximal";
        case ViolationKind::interior_edge_count: return "interior-edge-count";
    }
    return "unknown";
}

std::int64_t interior_edge_count(const Instance& inst) {
    return interior_edge_count(static_cast<std::int64_t>(inst.n()), static_cast<std::int64_t>(inst.n_border()),
                               static_cast<std::int64_t>(inst.holes()));
}

std::vector<Violation> validate(const Triangulation& t) {
    const Instance& inst = t.instance();
    const auto n = static_cast<VertexId>(inst.n());
    std::vector<Violation> out;

    std::vector<Edge> edges;
    for (const Edge& e : t.edges()) {
        if (e.u == e.v || e.v >= n) {
            out.push_back({ViolationKind::edge_out_of_range, {e}, {}, "edge " + to_string(e) + " is not a vertex pair of the instance"});
        } else {
            edges.push_back(e);
        }
    }
    const RegionIndex region(inst);
    for (const Edge& b : inst.border_edges()) {
        if (!t.contains(b)) out.push_back({ViolationKind::missing_border_edge, {b}, {}, "border edge " + to_string(b) + " is missing"});
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (properly_intersect(inst.segment(edges[i]), inst.segment(edges[j]))) {
                out.push_back({ViolationKind::crossing_edges, {edges[i], edges[j]}, {},
                               "edges " + to_string(edges[i]) + " and " + to_string(edges[j]) + " cross"});
            }
        }
    }
    for (const Edge& e : edges) {
        bool through_vertex = false;
        for (VertexId p = 0; p < n; ++p) {
            if (point_on_open_segment(inst.points[p], inst.segment(e))) {
                through_vertex = true;
                out.push_back({ViolationKind::vertex_on_edge, {e}, {p},
                               "vertex " + std::to_string(p) + " lies inside edge " + to_string(e)});
            }
        }
        if (!through_vertex && !region.admissible(e)) {
            out.push_back({ViolationKind::edge_outside_region, {e}, {}, "edge " + to_string(e) + " leaves the region"});
        }
    }
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            const Edge cand(i, j);
            if (t.contains(cand) || !region.admissible(cand)) continue;
            const Segment s = inst.segment(cand);
            const bool blocked = std::any_of(edges.begin(), edges.end(),
                                             [&](const Edge& e) { return properly_intersect(s, inst.segment(e)); });
            if (!blocked) {
                out.push_back({ViolationKind::not_maximal, {cand}, {}, "edge " + to_string(cand) + " could be added"});
            }
        }
    }
    if (out.empty()) {
        const auto border = static_cast<std::int64_t>(inst.border_edges().size());
        const auto interior = static_cast<std::int64_t>(edges.size()) - border;
        const auto expected = interior_edge_count(inst);
        if (interior != expected) {
            out.push_back({ViolationKind::interior_edge_count, {}, {},
                           std::to_string(interior) + " interior edges, expected " + std::to_string(expected)});
        }
    }
    return out;
}

void require_valid(const Triangulation& t, std::string_view what) {
    const auto v = validate(t);
    if (!v.empty()) {
        throw Error(ErrorKind::PreconditionFailed,
                    std::string(what) + " is not a valid triangulation (" + std::string(to_string(v.front().kind)) +
                        ": " + v.front().message + ")");
    }
}

std::vector<Edge> candidate_order(std::size_t n, const Priority& priority) {
    std::vector<Edge> order;
    order.reserve(n * (n - 1) / 2);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) order.emplace_back(i, j);
    }
    if (priority.kind == PriorityKind::random) {
        Rng rng(priority.seed);
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[bounded(rng, i)]);
    }
    return order;
}

Triangulation greedy_triangulate(InstancePtr inst, std::span<const Edge> order) {
    require_valid_instance(*inst);
    const RegionIndex region(*inst);
    std::vector<Edge> accepted = inst->border_edges();
    std::vector<Segment> segments;
    for (const Edge& e : accepted) segments.push_back(inst->segment(e));

    auto consider = [&](const Edge& e) {
        if (e.v >= inst->n() || e.u == e.v) return;
        if (std::find(accepted.begin(), accepted.end(), e) != accepted.end()) return;
        if (!region.admissible(e)) return;
        const Segment s = inst->segment(e);
        for (const Segment& other : segments) {
            if (properly_intersect(s, other)) return;
        }
        accepted.push_back(e);
        segments.push_back(s);
    };
    for (const Edge& e : order) consider(e);
    // A rejected pair stays rejected as edges are added, so one extra pass suffices.
    for (const Edge& e : candidate_order(inst->n(), Priority::lexicographic())) consider(e);
    return Triangulation(std::move(inst), std::move(accepted));
}

Triangulation greedy_triangulate(InstancePtr inst, const Priority& priority) {
    const auto order = candidate_order(inst->n(), priority);
    return greedy_triangulate(std::move(inst), order);
}

FaceIndex::FaceIndex(const Triangulation& t) : tri_(t), apex_(t.size(), {-1, -1}) {
    const Instance& inst = t.instance();
    const std::size_t n = inst.n();
    const auto& pts = inst.points;

    std::vector<std::vector<VertexId>> around(n);
    for (const Edge& e : t.edges()) {
        around[e.u].push_back(e.v);
        around[e.v].push_back(e.u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(around[v].begin(), around[v].end(), [&](VertexId p, VertexId q) {
            return angle_less({pts[p].x - pts[v].x, pts[p].y - pts[v].y}, {pts[q].x - pts[v].x, pts[q].y - pts[v].y});
        });
    }
    // Half-edge u->v continues as v->w, w being the neighbour of v just clockwise of u.
    auto next_vertex = [&](VertexId u, VertexId v) {
        const auto& ring = around[v];
        const auto it = std::find(ring.begin(), ring.end(), u);
        const std::size_t k = static_cast<std::size_t>(it - ring.begin());
        return ring[(k + ring.size() - 1) % ring.size()];
    };

    std::vector<std::vector<VertexId>> hole_sets;
    for (std::size_t k = 1; k < inst.border.size(); ++k) {
        auto s = inst.border[k];
        std::sort(s.begin(), s.end());
        hole_sets.push_back(std::move(s));
    }
    const auto polys = inst.border_polygons();

    // visited[i][side]: side 0 is u->v, side 1 is v->u for edge i.
    std::vector<std::array<bool, 2>> visited(t.size(), {false, false});
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (int side = 0; side < 2; ++side) {
            if (visited[i][side]) continue;
            const Edge& e0 = t.edges()[i];
            VertexId u = side == 0 ? e0.u : e0.v;
            VertexId v = side == 0 ? e0.v : e0.u;
            std::vector<VertexId> cycle;
            std::vector<std::pair<std::size_t, int>> halfedges;
            while (true) {
                const Edge e(u, v);
                const std::size_t idx = t.index_of(e);
                const int s = u == e.u ? 0 : 1;
                if (visited[idx][s]) break;
                visited[idx][s] = true;
                halfedges.emplace_back(idx, s);
                cycle.push_back(u);
                const VertexId w = next_vertex(u, v);
                u = v;
                v = w;
            }
            Polygon poly;
            for (VertexId id : cycle) poly.push_back(pts[id]);
            if (polygon_area2(poly) <= 0) continue;  // outer face, or a degenerate walk
            auto sorted = cycle;
            std::sort(sorted.begin(), sorted.end());
            if (std::find(hole_sets.begin(), hole_sets.end(), sorted) != hole_sets.end()) {
                if (cycle.size() != 3) continue;
                const Point c3{poly[0].x + poly[1].x + poly[2].x, poly[0].y + poly[1].y + poly[2].y};
                if (point_in_region_scaled(c3, 3, polys) != Location::inside) continue;
            }
            if (cycle.size() != 3) {
                std::string list;
                for (VertexId id : cycle) list += (list.empty() ? "" : ",") + std::to_string(id);
                throw Error(ErrorKind::NotATriangulation, "face (" + list + ") is not a triangle");
            }
            faces_.push_back({{cycle[0], cycle[1], cycle[2]}});
            for (std::size_t k = 0; k < 3; ++k) {
                apex_[halfedges[k].first][halfedges[k].second] = cycle[(k + 2) % 3];
            }
        }
    }
    for (Face& f : faces_) {
        auto& vs = f.vertices;
        std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
    }
    std::sort(faces_.begin(), faces_.end());
}

std::optional<Quadrilateral> FaceIndex::quadrilateral(const Edge& e) const {
    const std::size_t idx = tri_.index_of(e);
    if (idx == tri_.size()) throw Error(ErrorKind::EdgeNotInTriangulation, "edge " + to_string(e) + " is not in the triangulation");
    const auto [left, right] = apex_[idx];
    if (left < 0 || right < 0) return std::nullopt;
    Quadrilateral q;
    q.a = e.u;
    q.c = e.v;
    q.d = static_cast<VertexId>(left);   // face a, c, d lies left of a->c
    q.b = static_cast<VertexId>(right);  // face c, a, b lies left of c->a
    const auto& p = tri_.instance().points;
    q.strictly_convex = orient(p[q.a], p[q.b], p[q.c]) > 0 && orient(p[q.b], p[q.c], p[q.d]) > 0 &&
                        orient(p[q.c], p[q.d], p[q.a]) > 0 && orient(p[q.d], p[q.a], p[q.b]) > 0;
    return q;
}

std::vector<Face> faces(const Triangulation& t) {
    const FaceIndex index(t);
    return {index.faces().begin(), index.faces().end()};
}

std::optional<Quadrilateral> quadrilateral_of(const Triangulation& t, const Edge& e) { return FaceIndex(t).quadrilateral(e); }

Triangulation flip(const Triangulation& t, const Quadrilateral& q) {
    if (!q.strictly_convex) {
        throw Error(ErrorKind::NotFlippable, "quadrilateral around " + to_string(q.diagonal()) + " is not strictly convex");
    }
    std::vector<Edge> edges(t.edges().begin(), t.edges().end());
    const auto it = std::find(edges.begin(), edges.end(), q.diagonal());
    if (it == edges.end()) throw Error(ErrorKind::EdgeNotInTriangulation, "edge " + to_string(q.diagonal()) + " is not in the triangulation");
    *it = q.opposite();
    return Triangulation(t.instance_ptr(), std::move(edges));
}

Triangulation flip(const Triangulation& t, const Edge& e) {
    const auto q = quadrilateral_of(t, e);
    if (!q) throw Error(ErrorKind::NotFlippable, "edge " + to_string(e) + " borders only one face");
    return flip(t, *q);
}

}  // namespace flipdist
