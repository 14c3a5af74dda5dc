#pragma once

// Ground truth at desk scale: the whole flip graph by breadth-first closure, and an
// independent exhaustive enumeration of triangulations that never performs a flip.

#include "flipdist/triangulation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace flipdist {

using EdgeSet = std::vector<Edge>;  // sorted canonical edge list

inline constexpr std::size_t kMaxFlipGraphNodes = 1'000'000;
inline constexpr std::size_t kMaxEnumerationPoints = 12;

class FlipGraph {
public:
    struct Link {
        Edge flipped;
        std::size_t neighbor;
    };

    const InstancePtr& instance() const { return instance_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<EdgeSet>& nodes() const { return nodes_; }
    const std::vector<Link>& links(std::size_t node) const { return adjacency_[node]; }
    std::size_t edge_count() const;

    std::optional<std::size_t> find(const Triangulation& t) const;
    Triangulation triangulation(std::size_t node) const { return Triangulation(instance_, nodes_[node]); }

    /// Breadth-first flip distances from one node to every node (unreachable = npos).
    std::vector<std::size_t> distances_from(std::size_t node) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    friend FlipGraph build_flip_graph(const Triangulation& seed, std::size_t max_nodes);

    InstancePtr instance_;
    std::vector<EdgeSet> nodes_;
    std::vector<std::vector<Link>> adjacency_;
    std::map<EdgeSet, std::size_t> index_;
};

/// Closure of the seed under all legal flips. Throws Error(GraphTooLarge).
FlipGraph build_flip_graph(const Triangulation& seed, std::size_t max_nodes = kMaxFlipGraphNodes);

/// Exact flip distance by BFS. Throws Error(InstanceMismatch), Error(GraphTooLarge).
std::size_t exact_flip_distance(const Triangulation& t1, const Triangulation& t2);

/// Every maximal non-crossing admissible edge set that contains the border, by
/// exhaustive search. Sorted. Throws Error(InstanceTooLarge) above 12 points.
std::vector<EdgeSet> enumerate_triangulations_direct(const Instance& inst);

}  // namespace flipdist
