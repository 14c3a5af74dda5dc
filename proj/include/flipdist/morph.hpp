#pragma once

#include "flipdist/intersect.hpp"

#include <vector>

namespace flipdist {

struct FlipStep {
    Edge removed;
    Edge added;
    Count before = 0;  // crossings with the target before this flip
    Count after = 0;

    friend bool operator==(const FlipStep&, const FlipStep&) = default;
};

struct FlipSequence {
    Triangulation start;
    Triangulation target;
    std::vector<FlipStep> steps;
};

struct ReducingFlip {
    Edge edge;
    Quadrilateral quad;
    Count new_total = 0;
};

/// The canonically smallest maximally crossed edge of t whose quadrilateral is strictly
/// convex and whose flip lowers the crossing total with the target.
/// Throws Error(AlreadyEqual) when t == target, Error(LemmaViolation) when no maximal
/// edge qualifies.
ReducingFlip find_reducing_flip(const Triangulation& t, const Triangulation& target);

/// Flips until the target is reached; every step strictly lowers the crossing total,
/// so the length is at most #(t1, t2). Throws Error(InstanceMismatch) and propagates
/// Error(LemmaViolation).
FlipSequence morph(const Triangulation& t1, const Triangulation& t2);

/// Applies the steps to the start and returns the result. Throws Error(NotFlippable)
/// or Error(EdgeNotInTriangulation) when a step does not apply.
Triangulation replay(const Triangulation& start, const std::vector<FlipStep>& steps);

/// Violations of the sequence invariants (strict decrease, chaining, replay, bound).
std::vector<std::string> sequence_violations(const FlipSequence& seq);

constexpr Count intersection_upper_bound(std::int64_t n, std::int64_t n_border, std::int64_t holes) {
    const std::int64_t e = interior_edge_count(n, n_border, holes);
    return e * e;
}

Count intersection_upper_bound(const Instance& inst);

}  // namespace flipdist
