#include "flipdist/oracle.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <bitset>
#include <deque>

namespace flipdist {

std::size_t FlipGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& l : adjacency_) total += l.size();
    return total / 2;
}

std::optional<std::size_t> FlipGraph::find(const Triangulation& t) const {
    if (!(t.instance_ptr() == instance_ || t.instance() == *instance_)) return std::nullopt;
    const EdgeSet key(t.edges().begin(), t.edges().end());
    const auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> FlipGraph::distances_from(std::size_t node) const {
    std::vector<std::size_t> dist(nodes_.size(), npos);
    std::deque<std::size_t> queue{node};
    dist[node] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (const Link& l : adjacency_[u]) {
            if (dist[l.neighbor] == npos) {
                dist[l.neighbor] = dist[u] + 1;
                queue.push_back(l.neighbor);
            }
        }
    }
    return dist;
}

FlipGraph build_flip_graph(const Triangulation& seed, std::size_t max_nodes) {
    FlipGraph g;
    g.instance_ = seed.instance_ptr();
    const RegionIndex region(*g.instance_);

    auto intern = [&](EdgeSet edges) {
        const auto [it, inserted] = g.index_.emplace(std::move(edges), g.nodes_.size());
        if (inserted) {
            if (g.nodes_.size() >= max_nodes) {
                throw Error(ErrorKind::GraphTooLarge, "flip graph exceeds " + std::to_string(max_nodes) + " nodes");
            }
            g.nodes_.push_back(it->first);
            g.adjacency_.emplace_back();
        }
        return it->second;
    };

    intern(EdgeSet(seed.edges().begin(), seed.edges().end()));
    for (std::size_t next = 0; next < g.nodes_.size(); ++next) {
        const Triangulation t(g.instance_, g.nodes_[next]);
        const FaceIndex index(t);
        std::vector<FlipGraph::Link> links;
        for (const Edge& e : t.edges()) {
            if (region.is_border_edge(e)) continue;
            const auto quad = index.quadrilateral(e);
            if (!quad || !quad->strictly_convex) continue;
            const Triangulation flipped = flip(t, *quad);
            const std::size_t id = intern(EdgeSet(flipped.edges().begin(), flipped.edges().end()));
            links.push_back({e, id});
        }
        g.adjacency_[next] = std::move(links);
    }
    return g;
}

std::size_t exact_flip_distance(const Triangulation& t1, const Triangulation& t2) {
    require_same_instance(t1, t2);
    if (t1 == t2) return 0;
    const FlipGraph g = build_flip_graph(t1);
    const auto target = g.find(t2);
    if (!target) throw Error(ErrorKind::PreconditionFailed, "target is not reachable by flips from the start");
    return g.distances_from(0)[*target];
}

namespace {

constexpr std::size_t kMaxCandidates = kMaxEnumerationPoints * (kMaxEnumerationPoints - 1) / 2;
using Bits = std::bitset<kMaxCandidates>;

struct Enumerator {
    std::vector<Edge> candidates;
    std::vector<Bits> crosses;  // crosses[i][j]: candidates i and j properly intersect
    std::vector<Bits> crosses_later;
    EdgeSet base;
    std::vector<EdgeSet> found;

    void run(std::size_t i, Bits included, Bits excluded) {
        if (i == candidates.size()) {
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                if (excluded[k] && (crosses[k] & included).none()) return;
            }
            EdgeSet edges = base;
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                if (included[k]) edges.push_back(candidates[k]);
            }
            std::sort(edges.begin(), edges.end());
            found.push_back(std::move(edges));
            return;
        }
        if ((crosses[i] & included).none()) {
            Bits with = included;
            with.set(i);
            run(i + 1, with, excluded);
        }
        // Leaving i out only pays off if something can still block it.
        if ((crosses[i] & included).any() || crosses_later[i].any()) {
            Bits without = excluded;
            without.set(i);
            run(i + 1, included, without);
        }
    }
};

}  // namespace

std::vector<EdgeSet> enumerate_triangulations_direct(const Instance& inst) {
    if (inst.n() > kMaxEnumerationPoints) {
        throw Error(ErrorKind::InstanceTooLarge, std::to_string(inst.n()) + " points exceed the enumeration limit of " +
                                                     std::to_string(kMaxEnumerationPoints));
    }
    require_valid_instance(inst);
    const RegionIndex region(inst);
    Enumerator en;
    en.base = inst.border_edges();
    for (const Edge& e : region.admissible_edges()) {
        if (!region.is_border_edge(e)) en.candidates.push_back(e);
    }
    const std::size_t k = en.candidates.size();
    en.crosses.assign(k, Bits{});
    en.crosses_later.assign(k, Bits{});
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i != j && properly_intersect(inst.segment(en.candidates[i]), inst.segment(en.candidates[j]))) {
                en.crosses[i].set(j);
                if (j > i) en.crosses_later[i].set(j);
            }
        }
    }
    en.run(0, Bits{}, Bits{});
    std::sort(en.found.begin(), en.found.end());
    return en.found;
}

}  // namespace flipdist
