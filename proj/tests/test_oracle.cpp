#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "pathhom/oracle.hpp"
#include "pathhom/path_counts.hpp"

using pathhom::brute_force_count;
using pathhom::cartesian_product;
using pathhom::Count;
using pathhom::dp_walk_count;
using pathhom::path_graph;
using pathhom::path_walk_dp;
using pathhom::PathQuery;
using pathhom::SimpleGraph;

namespace {

// relabel by a permutation, used for the automorphism-invariance property
SimpleGraph relabel(const SimpleGraph& g, const std::vector<std::int64_t>& perm) {
    SimpleGraph out(g.order());
    for (std::int64_t v = 0; v < g.order(); ++v)
        for (std::int64_t u : g.neighbors(v))
            if (u > v) out.add_edge(perm[static_cast<std::size_t>(v)],
                                    perm[static_cast<std::size_t>(u)]);
    return out;
}

}  // namespace

TEST_CASE("path graphs") {
    const auto p1 = path_graph(1);
    CHECK(p1.order() == 1);
    CHECK(p1.edge_count() == 0);
    const auto p2 = path_graph(2);
    CHECK(p2.order() == 2);
    CHECK(p2.adjacent(0, 1));
    const auto p5 = path_graph(5);
    CHECK(p5.order() == 5);
    CHECK(p5.edge_count() == 4);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("cartesian products") {
    const auto square = cartesian_product(path_graph(2), path_graph(2));
    CHECK(square.order() == 4);
    CHECK(square.edge_count() == 4);
    for (std::int64_t v = 0; v < 4; ++v)
        CHECK(square.neighbors(v).size() == 2);  // the 4-cycle

    const auto p4 = path_graph(4);
    const auto copy = cartesian_product(path_graph(1), p4);
    CHECK(copy.order() == 4);
    for (std::int64_t v = 0; v < 4; ++v)
        CHECK(copy.neighbors(v) == p4.neighbors(v));

    const auto grid = cartesian_product(path_graph(4), path_graph(5));
    CHECK(grid.order() == 20);
    CHECK(grid.edge_count() == 31);
    // row-major encoding: (a,u) -> a*5+u
    CHECK(grid.adjacent(0, 1));   // (0,0)-(0,1)
    CHECK(grid.adjacent(0, 5));   // (0,0)-(1,0)
    CHECK(!grid.adjacent(0, 6));  // (0,0)-(1,1) is a diagonal
    CHECK(!grid.adjacent(4, 5));  // (0,4)-(1,0) would wrap
}

TEST_CASE("brute force counts, worked values") {
    const auto grid45 = cartesian_product(path_graph(4), path_graph(5));
    CHECK(brute_force_count(1, grid45, std::nullopt, true) == 20);
    const auto square = cartesian_product(path_graph(2), path_graph(2));
    CHECK(brute_force_count(2, square, std::nullopt, true) == 12);
    CHECK(brute_force_count(4, grid45, 0, true) == 43);  // anchor (0,0)
}

TEST_CASE("dp walk counts, worked values") {
    const auto p2 = path_graph(2);
    CHECK(dp_walk_count(3, p2, std::nullopt, false) == 2);
    CHECK(dp_walk_count(3, p2, std::nullopt, true) == 8);
    const auto grid88 = cartesian_product(path_graph(8), path_graph(8));
    CHECK(dp_walk_count(8, grid88, std::nullopt, true) == 2951832);
}

TEST_CASE("dp and brute force implement one contract") {
    for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t k = 0; k <= 4; ++k) {
            const SimpleGraph g = k == 0 ? path_graph(n)
                                         : cartesian_product(path_graph(n), path_graph(k));
            for (std::int64_t m = 1; m <= 6; ++m) {
                for (bool weak : {false, true}) {
                    CHECK(dp_walk_count(m, g, std::nullopt, weak) ==
                          brute_force_count(m, g, std::nullopt, weak));
                    for (std::int64_t v = 0; v < g.order(); ++v)
                        CHECK(dp_walk_count(m, g, v, weak) ==
                              brute_force_count(m, g, v, weak));
                }
            }
        }
    }
}

TEST_CASE("totals are invariant under graph automorphisms") {
    for (std::int64_t n = 2; n <= 5; ++n) {
        const auto path = path_graph(n);
        std::vector<std::int64_t> flip(static_cast<std::size_t>(n));
        for (std::int64_t v = 0; v < n; ++v)
            flip[static_cast<std::size_t>(v)] = n - 1 - v;
        const auto flipped = relabel(path, flip);
        for (std::int64_t m = 1; m <= 5; ++m)
            CHECK(brute_force_count(m, path, std::nullopt, true) ==
                  brute_force_count(m, flipped, std::nullopt, true));
    }
    // both reflections of a grid
    const auto grid = cartesian_product(path_graph(3), path_graph(4));
    std::vector<std::int64_t> flip_first(12), flip_second(12);
    for (std::int64_t a = 0; a < 3; ++a) {
        for (std::int64_t u = 0; u < 4; ++u) {
            flip_first[static_cast<std::size_t>(a * 4 + u)] = (2 - a) * 4 + u;
            flip_second[static_cast<std::size_t>(a * 4 + u)] = a * 4 + (3 - u);
        }
    }
    for (const auto& perm : {flip_first, flip_second}) {
        const auto relabeled = relabel(grid, perm);
        for (std::int64_t m = 1; m <= 5; ++m)
            CHECK(brute_force_count(m, grid, std::nullopt, true) ==
                  brute_force_count(m, relabeled, std::nullopt, true));
    }
}

TEST_CASE("specialized and general walk DP match exactly") {
    for (std::int64_t n = 1; n <= 8; ++n) {
        const auto path = path_graph(n);
        for (std::int64_t m = 1; m <= 8; ++m)
            for (std::int64_t j = 0; j < n; ++j)
                for (bool weak : {false, true})
                    CHECK(dp_walk_count(m, path, j, weak) ==
                          path_walk_dp(PathQuery{m, n, j}, weak));
    }
}

TEST_CASE("graph and walk argument validation") {
    SimpleGraph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // duplicate insert is a no-op
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(brute_force_count(2, g, 5, true), std::invalid_argument);
    CHECK_THROWS_AS(dp_walk_count(0, g, std::nullopt, true), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(0), std::invalid_argument);
}
