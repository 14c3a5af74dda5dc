#pragma once

#include "flipdist/triangulation.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace flipdist {

using Count = std::int64_t;

/// Proper crossings between the edges of two triangulations of the same instance.
struct CrossingReport {
    Count total = 0;
    /// One entry per edge of the first triangulation, in canonical edge order.
    std::vector<std::pair<Edge, Count>> per_edge;
    /// Edges attaining the maximum per-edge count, canonical order; empty iff total == 0.
    std::vector<Edge> max_edges;
    Count max_count = 0;

    Count count_of(const Edge& e) const;
};

/// Throws Error(InstanceMismatch).
CrossingReport count_pair(const Triangulation& t1, const Triangulation& t2);

/// Edges of t properly crossing the segment between the two vertices of s.
/// Throws Error(SegmentOutsideRegion) unless s is an admissible vertex pair.
Count segment_crossing_count(const Edge& s, const Triangulation& t);

/// Same count without the region check, for callers that already know s is admissible.
Count crossing_count_unchecked(const Segment& s, const Triangulation& t);

/// The six segments spanned by a quadrilateral abcd: four sides and two diagonals.
enum class QuadSegment { ab, bc, cd, da, ac, bd };
enum class Corner { a, b, c, d };

inline constexpr std::array<QuadSegment, 6> kQuadSegments{QuadSegment::ab, QuadSegment::bc, QuadSegment::cd,
                                                          QuadSegment::da, QuadSegment::ac, QuadSegment::bd};
inline constexpr std::array<Corner, 4> kCorners{Corner::a, Corner::b, Corner::c, Corner::d};

/// Classified crossing counts of a second triangulation against the segments of one
/// quadrilateral of the first: #(xy), #(xy,zw), #(xy,zw,uv), #_v(xy) and #_v(xy,zw).
class QuadCrossings {
public:
    QuadCrossings(const Quadrilateral& quad, const Triangulation& t2);

    const Quadrilateral& quad() const { return quad_; }
    VertexId vertex(Corner c) const;
    Edge edge(QuadSegment s) const;

    /// Edges of t2 crossing every listed segment.
    Count count(QuadSegment s) const;
    Count count(QuadSegment s1, QuadSegment s2) const;
    Count count(QuadSegment s1, QuadSegment s2, QuadSegment s3) const;
    /// Edges of t2 incident to the corner and crossing every listed segment.
    Count count_from(Corner v, QuadSegment s) const;
    Count count_from(Corner v, QuadSegment s1, QuadSegment s2) const;
    /// Whether the segment itself is an edge of t2.
    bool in_t2(QuadSegment s) const;

    /// Edges of t2 that cross at least one of the six segments or coincide with a diagonal.
    const std::vector<Edge>& touching() const { return touching_; }
    /// The crossing t2 edges of one segment, canonical order.
    std::vector<Edge> crossers(QuadSegment s) const;
    std::vector<Edge> crossers(QuadSegment s1, QuadSegment s2) const;

private:
    using Mask = std::uint8_t;
    Count count_mask(Mask required, std::int64_t corner) const;

    Quadrilateral quad_;
    std::vector<Edge> touching_;
    std::vector<Mask> masks_;  // bit i set iff touching_[k] crosses kQuadSegments[i]
    std::array<bool, 6> in_t2_{};
};

/// Throws Error(QuadNotInTriangulation) if quad is not a quadrilateral of t1, and
/// Error(InstanceMismatch).
QuadCrossings classified_counts(const Triangulation& t1, const Quadrilateral& quad, const Triangulation& t2);

}  // namespace flipdist
