#pragma once

// Executable audits of the structural facts behind the flip-distance bound. Each audit
// works on a pair of valid triangulations of one instance and reports, per tested
// configuration, whether the stated property held. A check whose hypothesis never
// occurs is reported as skipped, never as passed.

#include "flipdist/intersect.hpp"

#include <array>
#include <string>
#include <vector>

namespace flipdist {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

struct Check {
    std::string name;
    std::string property;
    CheckStatus status = CheckStatus::skipped;
    std::string witness;
};

struct AuditReport {
    std::vector<Check> checks;

    bool ok() const;
    std::size_t count(std::string_view name, CheckStatus status) const;
    std::size_t count(CheckStatus status) const;
    void append(const AuditReport& other);
};

/// Planarity, no vertex inside a quadrilateral, no meeting inside a quadrilateral,
/// closest-crossing adjacency, equality iff uncrossed, crossed edges absent from the
/// other side, border edges shared and uncrossed.
/// Throws Error(InstanceMismatch) and Error(PreconditionFailed) for invalid input.
AuditReport audit_propositions(const Triangulation& t1, const Triangulation& t2);

/// Every maximally crossed edge is interior and sits in a strictly convex quadrilateral.
/// Throws Error(AlreadyEqual).
AuditReport audit_lemma1(const Triangulation& t1, const Triangulation& t2);

/// For a maximal edge ac in abcd: if bd is in t2, or t2 has an edge from b crossing da
/// or cd, or from d crossing ab or bc, then bd is crossed strictly less often than ac.
AuditReport audit_lemma2(const Triangulation& t1, const Triangulation& t2);

/// For a maximal edge ac in abcd: no t2 edge from a crosses bc or cd, none from c
/// crosses ab or da, and ac is not in t2.
AuditReport audit_lemma2_2(const Triangulation& t1, const Triangulation& t2);

/// All of the above; the lemma audits only run when t1 != t2.
AuditReport audit_all(const Triangulation& t1, const Triangulation& t2);

/// Per corner a, b, c, d: the t2 edges crossing both quadrilateral sides at that corner.
/// Diagnostic only. Throws Error(QuadNotInTriangulation).
std::array<std::vector<Edge>, 4> detect_corner_cutters(const Triangulation& t1, const Quadrilateral& quad,
                                                       const Triangulation& t2);

/// Whether a maximal-edge quadrilateral has four equally crossed segments along one of
/// its two zigzags: ac, bc, da, bd or ac, ab, cd, bd.
struct ZigzagObservation {
    Edge diagonal;
    bool along_da_bc = false;
    bool along_ab_cd = false;
};

std::vector<ZigzagObservation> zigzag_diagnostic(const Triangulation& t1, const Triangulation& t2);

std::string format_report(const AuditReport& report);

}  // namespace flipdist
