#include "flipdist/morph.hpp"

#include "flipdist/error.hpp"

namespace flipdist {

Count intersection_upper_bound(const Instance& inst) {
    return intersection_upper_bound(static_cast<std::int64_t>(inst.n()), static_cast<std::int64_t>(inst.n_border()),
                                    static_cast<std::int64_t>(inst.holes()));
}

namespace {

ReducingFlip reducing_flip(const Triangulation& t, const Triangulation& target, const CrossingReport& report) {
    if (report.total == 0) throw Error(ErrorKind::AlreadyEqual, "triangulations are identical");
    const FaceIndex index(t);
    const Instance& inst = t.instance();
    for (const Edge& e : report.max_edges) {
        const auto quad = index.quadrilateral(e);
        if (!quad || !quad->strictly_convex) continue;
        const Count replacement = crossing_count_unchecked(inst.segment(quad->opposite()), target);
        const Count new_total = report.total - report.max_count + replacement;
        if (new_total < report.total) return {e, *quad, new_total};
    }
    std::string edges;
    for (const Edge& e : report.max_edges) edges += (edges.empty() ? "" : ", ") + to_string(e);
    throw Error(ErrorKind::LemmaViolation, "no maximal edge (" + edges + ") has a flip that lowers " +
                                               std::to_string(report.total) + " crossings");
}

}  // namespace

ReducingFlip find_reducing_flip(const Triangulation& t, const Triangulation& target) {
    return reducing_flip(t, target, count_pair(t, target));
}

FlipSequence morph(const Triangulation& t1, const Triangulation& t2) {
    require_same_instance(t1, t2);
    FlipSequence seq{t1, t2, {}};
    Triangulation current = t1;
    CrossingReport report = count_pair(current, t2);
    while (report.total > 0) {
        const ReducingFlip step = reducing_flip(current, t2, report);
        current = flip(current, step.quad);
        seq.steps.push_back({step.edge, step.quad.opposite(), report.total, step.new_total});
        report = count_pair(current, t2);
        if (report.total != step.new_total) {
            throw Error(ErrorKind::LemmaViolation, "crossing total after flipping " + to_string(step.edge) + " is " +
                                                       std::to_string(report.total) + ", predicted " +
                                                       std::to_string(step.new_total));
        }
    }
    if (!(current == t2)) throw Error(ErrorKind::LemmaViolation, "zero crossings but the edge sets differ");
    return seq;
}

Triangulation replay(const Triangulation& start, const std::vector<FlipStep>& steps) {
    Triangulation current = start;
    for (const FlipStep& s : steps) {
        const auto quad = quadrilateral_of(current, s.removed);
        if (!quad || !quad->strictly_convex || quad->opposite() != s.added) {
            throw Error(ErrorKind::NotFlippable, "step " + to_string(s.removed) + " -> " + to_string(s.added) +
                                                     " is not a flip of the current triangulation");
        }
        current = flip(current, *quad);
    }
    return current;
}

std::vector<std::string> sequence_violations(const FlipSequence& seq) {
    std::vector<std::string> out;
    if (!same_instance(seq.start, seq.target)) {
        out.push_back("start and target reference different instances");
        return out;
    }
    const Count initial = count_pair(seq.start, seq.target).total;
    if (static_cast<Count>(seq.steps.size()) > initial) {
        out.push_back(std::to_string(seq.steps.size()) + " steps exceed the " + std::to_string(initial) + " initial crossings");
    }
    Triangulation current = seq.start;
    Count previous = initial;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const FlipStep& s = seq.steps[i];
        const std::string where = "step " + std::to_string(i + 1);
        if (s.before != previous) out.push_back(where + ": before=" + std::to_string(s.before) + ", expected " + std::to_string(previous));
        if (!(s.after < s.before)) out.push_back(where + ": crossings do not decrease");
        try {
            current = replay(current, {s});
        } catch (const Error& e) {
            out.push_back(where + ": " + e.what());
            return out;
        }
        const Count actual = count_pair(current, seq.target).total;
        if (actual != s.after) out.push_back(where + ": after=" + std::to_string(s.after) + ", actual " + std::to_string(actual));
        previous = actual;
    }
    if (previous != 0) out.push_back("sequence ends with " + std::to_string(previous) + " crossings");
    if (!(current == seq.target)) out.push_back("replay does not reach the target");
    return out;
}

}  // namespace flipdist
