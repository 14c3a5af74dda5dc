#include "flipdist/intersect.hpp"

#include "flipdist/error.hpp"

#include <algorithm>

namespace flipdist {

Count CrossingReport::count_of(const Edge& e) const {
    const auto it = std::lower_bound(per_edge.begin(), per_edge.end(), e,
                                     [](const std::pair<Edge, Count>& p, const Edge& key) { return p.first < key; });
    return (it != per_edge.end() && it->first == e) ? it->second : 0;
}

CrossingReport count_pair(const Triangulation& t1, const Triangulation& t2) {
    require_same_instance(t1, t2);
    const Instance& inst = t1.instance();
    std::vector<Segment> other;
    other.reserve(t2.size());
    for (const Edge& e : t2.edges()) other.push_back(inst.segment(e));

    CrossingReport report;
    report.per_edge.reserve(t1.size());
    for (const Edge& e : t1.edges()) {
        const Segment s = inst.segment(e);
        const auto c = static_cast<Count>(
            std::count_if(other.begin(), other.end(), [&](const Segment& o) { return properly_intersect(s, o); }));
        report.per_edge.emplace_back(e, c);
        report.total += c;
        report.max_count = std::max(report.max_count, c);
    }
    if (report.max_count > 0) {
        for (const auto& [e, c] : report.per_edge) {
            if (c == report.max_count) report.max_edges.push_back(e);
        }
    }
    return report;
}

Count crossing_count_unchecked(const Segment& s, const Triangulation& t) {
    const Instance& inst = t.instance();
    return static_cast<Count>(std::count_if(t.edges().begin(), t.edges().end(),
                                            [&](const Edge& e) { return properly_intersect(s, inst.segment(e)); }));
}

Count segment_crossing_count(const Edge& s, const Triangulation& t) {
    const Instance& inst = t.instance();
    if (s.v >= inst.n() || !RegionIndex(inst).admissible(s)) {
        throw Error(ErrorKind::SegmentOutsideRegion, "segment " + to_string(s) + " does not lie inside the region");
    }
    return crossing_count_unchecked(inst.segment(s), t);
}

namespace {

constexpr int bit(QuadSegment s) { return static_cast<int>(s); }

}  // namespace

VertexId QuadCrossings::vertex(Corner c) const {
    switch (c) {
        case Corner::a: return quad_.a;
        case Corner::b: return quad_.b;
        case Corner::c: return quad_.c;
        case Corner::d: return quad_.d;
    }
    return quad_.a;
}

Edge QuadCrossings::edge(QuadSegment s) const {
    switch (s) {
        case QuadSegment::ab: return Edge(quad_.a, quad_.b);
        case QuadSegment::bc: return Edge(quad_.b, quad_.c);
        case QuadSegment::cd: return Edge(quad_.c, quad_.d);
        case QuadSegment::da: return Edge(quad_.d, quad_.a);
        case QuadSegment::ac: return Edge(quad_.a, quad_.c);
        case QuadSegment::bd: return Edge(quad_.b, quad_.d);
    }
    return Edge(quad_.a, quad_.c);
}

QuadCrossings::QuadCrossings(const Quadrilateral& quad, const Triangulation& t2) : quad_(quad) {
    const Instance& inst = t2.instance();
    std::array<Segment, 6> segs;
    for (std::size_t i = 0; i < 6; ++i) {
        const QuadSegment s = kQuadSegments[i];
        segs[i] = inst.segment(edge(s));
        in_t2_[i] = t2.contains(edge(s));
    }
    for (const Edge& e : t2.edges()) {
        const Segment s = inst.segment(e);
        Mask m = 0;
        for (std::size_t i = 0; i < 6; ++i) {
            if (properly_intersect(s, segs[i])) m = static_cast<Mask>(m | (1u << i));
        }
        if (m != 0) {
            touching_.push_back(e);
            masks_.push_back(m);
        }
    }
}

Count QuadCrossings::count_mask(Mask required, std::int64_t corner) const {
    Count total = 0;
    for (std::size_t k = 0; k < touching_.size(); ++k) {
        if ((masks_[k] & required) != required) continue;
        if (corner >= 0 && !touching_[k].has(static_cast<VertexId>(corner))) continue;
        ++total;
    }
    return total;
}

Count QuadCrossings::count(QuadSegment s) const { return count_mask(static_cast<Mask>(1u << bit(s)), -1); }

Count QuadCrossings::count(QuadSegment s1, QuadSegment s2) const {
    return count_mask(static_cast<Mask>((1u << bit(s1)) | (1u << bit(s2))), -1);
}

Count QuadCrossings::count(QuadSegment s1, QuadSegment s2, QuadSegment s3) const {
    return count_mask(static_cast<Mask>((1u << bit(s1)) | (1u << bit(s2)) | (1u << bit(s3))), -1);
}

Count QuadCrossings::count_from(Corner v, QuadSegment s) const {
    return count_mask(static_cast<Mask>(1u << bit(s)), vertex(v));
}

Count QuadCrossings::count_from(Corner v, QuadSegment s1, QuadSegment s2) const {
    return count_mask(static_cast<Mask>((1u << bit(s1)) | (1u << bit(s2))), vertex(v));
}

bool QuadCrossings::in_t2(QuadSegment s) const { return in_t2_[static_cast<std::size_t>(bit(s))]; }

std::vector<Edge> QuadCrossings::crossers(QuadSegment s) const {
    std::vector<Edge> out;
    for (std::size_t k = 0; k < touching_.size(); ++k) {
        if (masks_[k] & (1u << bit(s))) out.push_back(touching_[k]);
    }
    return out;
}

std::vector<Edge> QuadCrossings::crossers(QuadSegment s1, QuadSegment s2) const {
    const unsigned need = (1u << bit(s1)) | (1u << bit(s2));
    std::vector<Edge> out;
    for (std::size_t k = 0; k < touching_.size(); ++k) {
        if ((masks_[k] & need) == need) out.push_back(touching_[k]);
    }
    return out;
}

QuadCrossings classified_counts(const Triangulation& t1, const Quadrilateral& quad, const Triangulation& t2) {
    require_same_instance(t1, t2);
    const Edge diag = quad.diagonal();
    const auto fail = [&] {
        return Error(ErrorKind::QuadNotInTriangulation, "no quadrilateral around " + to_string(diag) + " with opposite " +
                                                            to_string(quad.opposite()) + " in the first triangulation");
    };
    if (!t1.contains(diag)) throw fail();
    const auto actual = FaceIndex(t1).quadrilateral(diag);
    if (!actual) throw fail();
    // The labelling may start at either diagonal endpoint, but must stay counter-clockwise.
    const bool same = actual->a == quad.a && actual->b == quad.b && actual->c == quad.c && actual->d == quad.d;
    const bool rotated = actual->a == quad.c && actual->b == quad.d && actual->c == quad.a && actual->d == quad.b;
    if (!same && !rotated) throw fail();
    Quadrilateral q = quad;
    q.strictly_convex = actual->strictly_convex;
    return QuadCrossings(q, t2);
}

}  // namespace flipdist
