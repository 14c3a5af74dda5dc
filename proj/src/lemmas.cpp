#include "flipdist/lemmas.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <sstream>

namespace flipdist {

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped: return "SKIP";
    }
    return "?";
}

bool AuditReport::ok() const { return count(CheckStatus::fail) == 0; }

std::size_t AuditReport::count(std::string_view name, CheckStatus status) const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [&](const Check& c) { return c.name == name && c.status == status; }));
}

std::size_t AuditReport::count(CheckStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

void AuditReport::append(const AuditReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

constexpr std::string_view kPlanarity = "edges of a triangulation do not cross";
constexpr std::string_view kNoVertexInQuad =
    "an edge of the second triangulation entering a quadrilateral of the first has no endpoint inside it";
constexpr std::string_view kNoMeetingInQuad = "edges of the second triangulation never meet inside a quadrilateral of the first";
constexpr std::string_view kClosestAdjacency =
    "for the crossing gh nearest to endpoint a of a crossed edge, ag and ah are edges of the second triangulation";
constexpr std::string_view kEqualityIffUncrossed = "the triangulations are equal iff nothing crosses";
constexpr std::string_view kCrossedAbsent = "a crossed edge does not belong to the other triangulation";
constexpr std::string_view kBorderShared = "border edges belong to both triangulations and are never crossed";
constexpr std::string_view kMaxEdgeConvex = "every maximally crossed edge is interior and its quadrilateral is strictly convex";
constexpr std::string_view kVertexCrosserReduces =
    "if bd is in t2, or a t2 edge from b or d crosses the far sides, flipping ac to bd lowers the crossings";
constexpr std::string_view kNoDiagonalEndpointCrosser = "no t2 edge from a or c enters the quadrilateral, and ac is not in t2";

Check make(std::string_view name, std::string_view property, CheckStatus status, std::string witness = {}) {
    return {std::string(name), std::string(property), status, std::move(witness)};
}

std::string quad_name(const Quadrilateral& q) {
    return "quad a=" + std::to_string(q.a) + " b=" + std::to_string(q.b) + " c=" + std::to_string(q.c) +
           " d=" + std::to_string(q.d);
}

std::string edge_list(const std::vector<Edge>& edges) {
    std::string s;
    for (const Edge& e : edges) s += (s.empty() ? "" : ",") + to_string(e);
    return s;
}

bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

// Closed quadrilateral minus its corners, as the union of its two faces.
bool inside_quad_not_corner(const Instance& inst, const Quadrilateral& q, VertexId v) {
    if (v == q.a || v == q.b || v == q.c || v == q.d) return false;
    const auto& p = inst.points;
    return in_closed_triangle(p[v], p[q.a], p[q.b], p[q.c]) || in_closed_triangle(p[v], p[q.a], p[q.c], p[q.d]);
}

bool inside_quad_open(const Instance& inst, const Quadrilateral& q, VertexId v) {
    if (v == q.a || v == q.b || v == q.c || v == q.d) return false;
    const auto& p = inst.points;
    const Point& x = p[v];
    auto strictly = [&](VertexId i, VertexId j, VertexId k) {
        return orient(p[i], p[j], x) > 0 && orient(p[j], p[k], x) > 0 && orient(p[k], p[i], x) > 0;
    };
    return strictly(q.a, q.b, q.c) || strictly(q.a, q.c, q.d) || point_on_open_segment(x, {p[q.a], p[q.c]});
}

void require_pair(const Triangulation& t1, const Triangulation& t2) {
    require_same_instance(t1, t2);
    require_valid(t1, "first triangulation");
    require_valid(t2, "second triangulation");
}

void require_distinct(const Triangulation& t1, const Triangulation& t2) {
    require_same_instance(t1, t2);
    if (t1 == t2) throw Error(ErrorKind::AlreadyEqual, "the triangulations are identical");
}

// Maximally crossed edges of t1 with their quadrilateral, if any.
struct MaxEdge {
    Edge edge;
    std::optional<Quadrilateral> quad;
};

std::vector<MaxEdge> max_edges(const Triangulation& t1, const CrossingReport& report) {
    const FaceIndex index(t1);
    std::vector<MaxEdge> out;
    for (const Edge& e : report.max_edges) out.push_back({e, index.quadrilateral(e)});
    return out;
}

}  // namespace

AuditReport audit_propositions(const Triangulation& t1, const Triangulation& t2) {
    require_pair(t1, t2);
    const Instance& inst = t1.instance();
    AuditReport report;

    for (const auto* t : {&t1, &t2}) {
        std::vector<Edge> witness;
        const auto edges = t->edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (properly_intersect(inst.segment(edges[i]), inst.segment(edges[j]))) {
                    witness.push_back(edges[i]);
                    witness.push_back(edges[j]);
                }
            }
        }
        const std::string which = t == &t1 ? "t1" : "t2";
        report.checks.push_back(make("planarity", kPlanarity, witness.empty() ? CheckStatus::pass : CheckStatus::fail,
                                     witness.empty() ? which : which + " crossing edges " + edge_list(witness)));
    }

    const FaceIndex index1(t1);
    const RegionIndex region(inst);
    for (const Edge& e : t1.edges()) {
        if (region.is_border_edge(e)) continue;
        const auto quad = index1.quadrilateral(e);
        if (!quad) continue;
        const QuadCrossings qc(*quad, t2);
        const auto& touching = qc.touching();
        if (touching.empty()) {
            report.checks.push_back(make("no-vertex-in-quadrilateral", kNoVertexInQuad, CheckStatus::skipped, quad_name(*quad)));
            report.checks.push_back(make("no-meeting-in-quadrilateral", kNoMeetingInQuad, CheckStatus::skipped, quad_name(*quad)));
            continue;
        }
        std::vector<Edge> bad;
        for (const Edge& f : touching) {
            if (inside_quad_not_corner(inst, *quad, f.u) || inside_quad_not_corner(inst, *quad, f.v)) bad.push_back(f);
        }
        report.checks.push_back(make("no-vertex-in-quadrilateral", kNoVertexInQuad,
                                     bad.empty() ? CheckStatus::pass : CheckStatus::fail,
                                     quad_name(*quad) + (bad.empty() ? "" : " endpoint inside for " + edge_list(bad))));
        if (touching.size() < 2) {
            report.checks.push_back(make("no-meeting-in-quadrilateral", kNoMeetingInQuad, CheckStatus::skipped, quad_name(*quad)));
            continue;
        }
        std::vector<Edge> meet;
        for (std::size_t i = 0; i < touching.size(); ++i) {
            for (std::size_t j = i + 1; j < touching.size(); ++j) {
                const Edge& f = touching[i];
                const Edge& g = touching[j];
                bool met = properly_intersect(inst.segment(f), inst.segment(g));
                for (VertexId v : {f.u, f.v}) {
                    if (g.has(v) && inside_quad_open(inst, *quad, v)) met = true;
                }
                if (met) {
                    meet.push_back(f);
                    meet.push_back(g);
                }
            }
        }
        report.checks.push_back(make("no-meeting-in-quadrilateral", kNoMeetingInQuad,
                                     meet.empty() ? CheckStatus::pass : CheckStatus::fail,
                                     quad_name(*quad) + (meet.empty() ? "" : " meeting edges " + edge_list(meet))));
    }

    const CrossingReport cr = count_pair(t1, t2);
    for (const auto& [e, c] : cr.per_edge) {
        if (c == 0) continue;
        std::vector<Edge> crossing;
        for (const Edge& f : t2.edges()) {
            if (properly_intersect(inst.segment(e), inst.segment(f))) crossing.push_back(f);
        }
        for (VertexId a : {e.u, e.v}) {
            const Segment base{inst.points[a], inst.points[e.other(a)]};
            const Edge nearest = *std::min_element(crossing.begin(), crossing.end(), [&](const Edge& f, const Edge& g) {
                return compare_crossings_along(base, inst.segment(f), inst.segment(g)) < 0;
            });
            std::vector<Edge> missing;
            for (VertexId end : {nearest.u, nearest.v}) {
                if (!t2.contains(Edge(a, end))) missing.emplace_back(a, end);
            }
            report.checks.push_back(make("closest-crossing-adjacency", kClosestAdjacency,
                                         missing.empty() ? CheckStatus::pass : CheckStatus::fail,
                                         "edge " + to_string(e) + " from " + std::to_string(a) + ", nearest crossing " +
                                             to_string(nearest) + (missing.empty() ? "" : ", missing " + edge_list(missing))));
        }
    }

    const bool equal = t1 == t2;
    report.checks.push_back(make("equality-iff-uncrossed", kEqualityIffUncrossed,
                                 equal == (cr.total == 0) ? CheckStatus::pass : CheckStatus::fail,
                                 std::string(equal ? "equal" : "different") + ", " + std::to_string(cr.total) + " crossings"));

    {
        std::vector<Edge> bad;
        for (const auto& [e, c] : cr.per_edge) {
            if (c > 0 && t2.contains(e)) bad.push_back(e);
        }
        const CrossingReport back = count_pair(t2, t1);
        for (const auto& [e, c] : back.per_edge) {
            if (c > 0 && t1.contains(e)) bad.push_back(e);
        }
        const bool vacuous = cr.total == 0;
        report.checks.push_back(make("crossed-edges-absent", kCrossedAbsent,
                                     vacuous ? CheckStatus::skipped : (bad.empty() ? CheckStatus::pass : CheckStatus::fail),
                                     bad.empty() ? std::to_string(cr.total) + " crossings" : "shared crossed edges " + edge_list(bad)));
        if (back.total != cr.total) {
            report.checks.push_back(make("crossed-edges-absent", "crossing totals agree from both sides", CheckStatus::fail,
                                         std::to_string(cr.total) + " vs " + std::to_string(back.total)));
        }
    }

    {
        std::vector<Edge> bad;
        for (const Edge& b : inst.border_edges()) {
            if (!t1.contains(b) || !t2.contains(b) || cr.count_of(b) != 0 || crossing_count_unchecked(inst.segment(b), t1) != 0) {
                bad.push_back(b);
            }
        }
        report.checks.push_back(make("border-edges-shared", kBorderShared, bad.empty() ? CheckStatus::pass : CheckStatus::fail,
                                     bad.empty() ? std::to_string(inst.border_edges().size()) + " border edges"
                                                 : "offending border edges " + edge_list(bad)));
    }
    return report;
}

AuditReport audit_lemma1(const Triangulation& t1, const Triangulation& t2) {
    require_distinct(t1, t2);
    const RegionIndex region(t1.instance());
    const CrossingReport cr = count_pair(t1, t2);
    AuditReport report;
    for (const MaxEdge& m : max_edges(t1, cr)) {
        std::string problem;
        if (region.is_border_edge(m.edge)) {
            problem = "is a border edge";
        } else if (!m.quad) {
            problem = "has no quadrilateral";
        } else if (!m.quad->strictly_convex) {
            problem = "has a non-convex " + quad_name(*m.quad);
        }
        report.checks.push_back(make("max-edge-convex", kMaxEdgeConvex, problem.empty() ? CheckStatus::pass : CheckStatus::fail,
                                     "edge " + to_string(m.edge) + " (" + std::to_string(cr.max_count) + " crossings)" +
                                         (problem.empty() ? "" : " " + problem)));
    }
    return report;
}

AuditReport audit_lemma2(const Triangulation& t1, const Triangulation& t2) {
    require_distinct(t1, t2);
    const CrossingReport cr = count_pair(t1, t2);
    AuditReport report;
    for (const MaxEdge& m : max_edges(t1, cr)) {
        if (!m.quad || !m.quad->strictly_convex) {
            report.checks.push_back(make("vertex-crosser-reduces", kVertexCrosserReduces, CheckStatus::skipped,
                                         "edge " + to_string(m.edge) + " has no convex quadrilateral"));
            continue;
        }
        using S = QuadSegment;
        const QuadCrossings qc(*m.quad, t2);
        std::vector<std::string> reasons;
        if (qc.in_t2(S::bd)) reasons.push_back("bd in t2");
        if (qc.count_from(Corner::b, S::da) > 0) reasons.push_back("b crosses da");
        if (qc.count_from(Corner::b, S::cd) > 0) reasons.push_back("b crosses cd");
        if (qc.count_from(Corner::d, S::ab) > 0) reasons.push_back("d crosses ab");
        if (qc.count_from(Corner::d, S::bc) > 0) reasons.push_back("d crosses bc");
        if (reasons.empty()) {
            report.checks.push_back(make("vertex-crosser-reduces", kVertexCrosserReduces, CheckStatus::skipped,
                                         quad_name(*m.quad) + " matches no hypothesis"));
            continue;
        }
        std::string why;
        for (const auto& r : reasons) why += (why.empty() ? "" : ", ") + r;
        const Count margin = qc.count(S::ac) - qc.count(S::bd);
        report.checks.push_back(make("vertex-crosser-reduces", kVertexCrosserReduces,
                                     margin > 0 ? CheckStatus::pass : CheckStatus::fail,
                                     quad_name(*m.quad) + " (" + why + "): #(ac)=" + std::to_string(qc.count(S::ac)) +
                                         " #(bd)=" + std::to_string(qc.count(S::bd)) + " margin=" + std::to_string(margin)));
    }
    return report;
}

AuditReport audit_lemma2_2(const Triangulation& t1, const Triangulation& t2) {
    require_distinct(t1, t2);
    const CrossingReport cr = count_pair(t1, t2);
    AuditReport report;
    for (const MaxEdge& m : max_edges(t1, cr)) {
        if (!m.quad || !m.quad->strictly_convex) {
            report.checks.push_back(make("no-diagonal-endpoint-crosser", kNoDiagonalEndpointCrosser, CheckStatus::skipped,
                                         "edge " + to_string(m.edge) + " has no convex quadrilateral"));
            continue;
        }
        using S = QuadSegment;
        const QuadCrossings qc(*m.quad, t2);
        std::vector<std::string> found;
        if (qc.count_from(Corner::a, S::bc) > 0) found.push_back("a crosses bc");
        if (qc.count_from(Corner::a, S::cd) > 0) found.push_back("a crosses cd");
        if (qc.count_from(Corner::c, S::ab) > 0) found.push_back("c crosses ab");
        if (qc.count_from(Corner::c, S::da) > 0) found.push_back("c crosses da");
        if (qc.in_t2(S::ac)) found.push_back("ac in t2");
        std::string what;
        for (const auto& f : found) what += (what.empty() ? "" : ", ") + f;
        report.checks.push_back(make("no-diagonal-endpoint-crosser", kNoDiagonalEndpointCrosser,
                                     found.empty() ? CheckStatus::pass : CheckStatus::fail,
                                     quad_name(*m.quad) + (found.empty() ? "" : ": " + what)));
    }
    return report;
}

AuditReport audit_all(const Triangulation& t1, const Triangulation& t2) {
    AuditReport report = audit_propositions(t1, t2);
    if (!(t1 == t2)) {
        report.append(audit_lemma1(t1, t2));
        report.append(audit_lemma2(t1, t2));
        report.append(audit_lemma2_2(t1, t2));
    }
    return report;
}

std::array<std::vector<Edge>, 4> detect_corner_cutters(const Triangulation& t1, const Quadrilateral& quad,
                                                       const Triangulation& t2) {
    const QuadCrossings qc = classified_counts(t1, quad, t2);
    using S = QuadSegment;
    return {qc.crossers(S::ab, S::da), qc.crossers(S::ab, S::bc), qc.crossers(S::bc, S::cd), qc.crossers(S::cd, S::da)};
}

std::vector<ZigzagObservation> zigzag_diagnostic(const Triangulation& t1, const Triangulation& t2) {
    require_same_instance(t1, t2);
    const CrossingReport cr = count_pair(t1, t2);
    std::vector<ZigzagObservation> out;
    for (const MaxEdge& m : max_edges(t1, cr)) {
        if (!m.quad) continue;
        using S = QuadSegment;
        const QuadCrossings qc(*m.quad, t2);
        const Count ac = qc.count(S::ac);
        const Count bd = crossing_count_unchecked(t1.instance().segment(m.quad->opposite()), t2);
        out.push_back({m.edge, qc.count(S::bc) == ac && qc.count(S::da) == ac && bd == ac,
                       qc.count(S::ab) == ac && qc.count(S::cd) == ac && bd == ac});
    }
    return out;
}

std::string format_report(const AuditReport& report) {
    std::ostringstream out;
    for (const Check& c : report.checks) {
        out << to_string(c.status) << "  " << c.name;
        if (!c.witness.empty()) out << "  " << c.witness;
        out << '\n';
    }
    out << "passed=" << report.count(CheckStatus::pass) << " failed=" << report.count(CheckStatus::fail)
        << " skipped=" << report.count(CheckStatus::skipped) << '\n';
    return out.str();
}

}  // namespace flipdist
