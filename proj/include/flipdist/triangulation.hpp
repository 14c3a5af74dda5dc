#pragma once

#include "flipdist/instance.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flipdist {

/// An edge set over an instance. Edges are canonical and sorted, so equality of
/// triangulations is plain set equality. Values are immutable; flip returns a new one.
class Triangulation {
public:
    Triangulation(InstancePtr instance, std::vector<Edge> edges);

    const Instance& instance() const { return *instance_; }
    const InstancePtr& instance_ptr() const { return instance_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }

    bool contains(const Edge& e) const;
    /// Position of e in edges(), or edges().size() when absent.
    std::size_t index_of(const Edge& e) const;

    /// Same edges over equal instances.
    friend bool operator==(const Triangulation& a, const Triangulation& b);

private:
    InstancePtr instance_;
    std::vector<Edge> edges_;
};

/// True when both reference the same instance (by identity or by value).
bool same_instance(const Triangulation& a, const Triangulation& b);
void require_same_instance(const Triangulation& a, const Triangulation& b);

struct Face {
    std::array<VertexId, 3> vertices;  // counter-clockwise

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;
};

/// Two faces abc and acd sharing the diagonal ac; a, b, c, d run counter-clockwise.
struct Quadrilateral {
    VertexId a = 0, b = 0, c = 0, d = 0;
    bool strictly_convex = false;

    Edge diagonal() const { return Edge(a, c); }
    Edge opposite() const { return Edge(b, d); }
};

enum class ViolationKind {
    edge_out_of_range,
    missing_border_edge,
    crossing_edges,
    vertex_on_edge,
    edge_outside_region,
    not_maximal,
    interior_edge_count,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<Edge> edges;
    std::vector<VertexId> vertices;
    std::string message;
};

/// Every violated triangulation invariant. The interior-edge-count identity is only
/// reported when all structural checks pass, since it follows from them.
std::vector<Violation> validate(const Triangulation& t);

/// Throws Error(PreconditionFailed) naming the first violation.
void require_valid(const Triangulation& t, std::string_view what);

enum class PriorityKind { lexicographic, random };

struct Priority {
    PriorityKind kind = PriorityKind::lexicographic;
    std::uint64_t seed = 0;

    static Priority lexicographic() { return {}; }
    static Priority random(std::uint64_t seed) { return {PriorityKind::random, seed}; }
};

/// All vertex pairs of an n-point instance in the scan order of `priority`.
std::vector<Edge> candidate_order(std::size_t n, const Priority& priority);

/// Border edges first, then each candidate that keeps the edge set planar and inside
/// the region, in the given order. Pairs absent from `order` are scanned last,
/// lexicographically.
Triangulation greedy_triangulate(InstancePtr inst, std::span<const Edge> order);
Triangulation greedy_triangulate(InstancePtr inst, const Priority& priority = Priority::lexicographic());

/// Face structure of a triangulation, derived from the angular order around each vertex.
class FaceIndex {
public:
    /// Throws Error(NotATriangulation) if a bounded region face is not a triangle.
    explicit FaceIndex(const Triangulation& t);

    std::span<const Face> faces() const { return faces_; }

    /// Quadrilateral around an edge of the triangulation; nullopt for border edges.
    /// Throws Error(EdgeNotInTriangulation).
    std::optional<Quadrilateral> quadrilateral(const Edge& e) const;

private:
    Triangulation tri_;
    std::vector<Face> faces_;
    // For each edge index: the third vertex of the face left of u->v and of v->u.
    std::vector<std::array<std::int64_t, 2>> apex_;
};

std::vector<Face> faces(const Triangulation& t);
std::optional<Quadrilateral> quadrilateral_of(const Triangulation& t, const Edge& e);

/// Replaces the diagonal e = ac of a strictly convex quadrilateral by bd.
/// Throws Error(EdgeNotInTriangulation) or Error(NotFlippable).
Triangulation flip(const Triangulation& t, const Edge& e);
/// Same as flip() with the quadrilateral already at hand.
Triangulation flip(const Triangulation& t, const Quadrilateral& q);

/// Non-border edges of any triangulation. From n - e + f = 1 - h and 3f = 2e_int + n_b:
/// e_int = 3n - 2n_b - 3 + 3h. Each hole adds three edges; it does not remove them.
constexpr std::int64_t interior_edge_count(std::int64_t n, std::int64_t n_border, std::int64_t holes) {
    return 3 * n - 2 * n_border - 3 + 3 * holes;
}

std::int64_t interior_edge_count(const Instance& inst);

}  // namespace flipdist
