#pragma once

#include "flipdist/geometry.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace flipdist {

using VertexId = std::uint32_t;

/// Unordered vertex pair stored with the smaller id first.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    constexpr Edge() = default;
    constexpr Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool has(VertexId w) const { return u == w || v == w; }
    constexpr VertexId other(VertexId w) const { return w == u ? v : u; }

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// A point set together with its border constraints. border[0] is the outer polygon,
/// border[1..] are holes. Polygons reference points by index.
struct Instance {
    std::vector<Point> points;
    std::vector<std::vector<VertexId>> border;

    std::size_t n() const { return points.size(); }
    /// Sum of the border polygon lengths.
    std::size_t n_border() const;
    std::size_t holes() const { return border.empty() ? 0 : border.size() - 1; }

    /// Border polygons resolved to coordinates.
    std::vector<Polygon> border_polygons() const;
    /// All border edges, sorted.
    std::vector<Edge> border_edges() const;

    Segment segment(const Edge& e) const { return {points[e.u], points[e.v]}; }

    friend bool operator==(const Instance&, const Instance&) = default;
};

using InstancePtr = std::shared_ptr<const Instance>;

/// Human-readable list of violated instance invariants; empty when valid.
std::vector<std::string> instance_violations(const Instance& inst);

/// Throws Error(InstanceInvalid) listing every violation.
void require_valid_instance(const Instance& inst);

/// Border polygons that share a vertex. Valid, but the region is pinched there.
bool is_pinched(const Instance& inst);

/// Precomputed region data for repeated "may this vertex pair be an edge" queries.
class RegionIndex {
public:
    explicit RegionIndex(const Instance& inst);

    /// True iff the open segment between the two vertices contains no point of the
    /// instance and lies in the interior of the constrained region.
    bool admissible(const Edge& e) const;

    /// All admissible vertex pairs in lexicographic order (border edges included).
    std::vector<Edge> admissible_edges() const;

    bool is_border_edge(const Edge& e) const;

private:
    const Instance* inst_;
    std::vector<Polygon> polygons_;
    std::vector<Edge> border_edges_;
};

}  // namespace flipdist
