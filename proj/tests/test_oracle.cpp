#include "flipdist/oracle.hpp"

#include "flipdist/error.hpp"
#include "flipdist/generate.hpp"
#include "flipdist/morph.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <algorithm>

using namespace flipdist;

namespace {

InstancePtr make(Instance inst) { return std::make_shared<const Instance>(std::move(inst)); }

InstancePtr convex(std::size_t n, std::size_t interior = 0) {
    return make(generate_instance({7, n + interior, Shape::convex_gon, 0, interior}));
}

std::vector<EdgeSet> sorted_nodes(const FlipGraph& g) {
    std::vector<EdgeSet> v = g.nodes();
    std::sort(v.begin(), v.end());
    return v;
}

template <class F>
ErrorKind error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("convex polygons have Catalan many triangulations") {
    const std::size_t catalan[] = {1, 2, 5, 14, 42, 132, 429};
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto inst = convex(n);
        const FlipGraph g = build_flip_graph(greedy_triangulate(inst));
        CHECK(g.size() == catalan[n - 3]);
        CHECK(enumerate_triangulations_direct(*inst).size() == catalan[n - 3]);
        // Every triangulation of a convex n-gon has n - 3 flippable diagonals.
        for (std::size_t k = 0; k < g.size(); ++k) CHECK(g.links(k).size() == n - 3);
        CHECK(g.edge_count() == g.size() * (n - 3) / 2);
    }
}

TEST_CASE("flip graph and direct enumeration agree") {
    for (std::uint64_t i = 0; i < 40; ++i) {
        const auto inst = make(generate_instance(flipdist::testing::corpus_spec(i)));
        if (inst->n() > 10) continue;
        const FlipGraph g = build_flip_graph(greedy_triangulate(inst));
        const auto direct = enumerate_triangulations_direct(*inst);
        REQUIRE(std::is_sorted(direct.begin(), direct.end()));
        CHECK(sorted_nodes(g) == direct);
        for (const EdgeSet& s : direct) CHECK(validate(Triangulation(inst, s)).empty());
    }
}

TEST_CASE("links are symmetric flips") {
    const auto inst = convex(6, 2);
    const FlipGraph g = build_flip_graph(greedy_triangulate(inst));
    for (std::size_t k = 0; k < g.size(); ++k) {
        for (const FlipGraph::Link& l : g.links(k)) {
            const Triangulation next = flip(g.triangulation(k), l.flipped);
            CHECK(g.find(next) == l.neighbor);
            const auto& back = g.links(l.neighbor);
            CHECK(std::any_of(back.begin(), back.end(), [&](const FlipGraph::Link& b) { return b.neighbor == k; }));
        }
    }
}

TEST_CASE("distances") {
    const auto inst = convex(6);
    const FlipGraph g = build_flip_graph(greedy_triangulate(inst));
    const auto d = g.distances_from(0);
    CHECK(d[0] == 0);
    CHECK(std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == FlipGraph::npos; }));
    // The flip graph of the hexagon has diameter 4.
    CHECK(*std::max_element(d.begin(), d.end()) <= 4);
    const Triangulation t0 = g.triangulation(0);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const Triangulation tk = g.triangulation(k);
        CHECK(exact_flip_distance(t0, tk) == d[k]);
        CHECK(exact_flip_distance(tk, t0) == d[k]);
        CHECK(d[k] <= static_cast<std::size_t>(count_pair(t0, tk).total));
        CHECK((d[k] == 0) == (tk == t0));
    }
}

TEST_CASE("triangle inequality on a small instance with interior points") {
    const auto inst = convex(5, 2);
    const FlipGraph g = build_flip_graph(greedy_triangulate(inst));
    std::vector<std::vector<std::size_t>> d;
    for (std::size_t k = 0; k < g.size(); ++k) d.push_back(g.distances_from(k));
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
            CHECK(d[a][b] == d[b][a]);
            for (std::size_t c = 0; c < g.size(); ++c) CHECK(d[a][c] <= d[a][b] + d[b][c]);
        }
    }
}

TEST_CASE("a single triangle and a triangle around a hole have one triangulation each") {
    const auto tri = make({{{0, 0}, {4, 0}, {0, 4}}, {{0, 1, 2}}});
    CHECK(build_flip_graph(greedy_triangulate(tri)).size() == 1);
    CHECK(enumerate_triangulations_direct(*tri).size() == 1);
}

TEST_CASE("resource limits") {
    const auto inst = convex(9);
    CHECK(error_of([&] { build_flip_graph(greedy_triangulate(inst), 100); }) == ErrorKind::GraphTooLarge);
    CHECK(error_of([&] { enumerate_triangulations_direct(*convex(13)); }) == ErrorKind::InstanceTooLarge);
    const auto other = convex(8);
    CHECK(error_of([&] { exact_flip_distance(greedy_triangulate(inst), greedy_triangulate(other)); }) ==
          ErrorKind::InstanceMismatch);
}
