#include <doctest.h>

#include <stdexcept>

#include "pathhom/lattice.hpp"
#include "test_util.hpp"

using pathhom::Count;
using pathhom::ladder_shortest_path_count;
using pathhom::LatticePoint;
using pathhom::shortest_path_count;
using testutil::constrained_lattice_dp;

namespace {
constexpr std::int64_t kNoLadder = 1 << 20;  // wall beyond any tested point
}

TEST_CASE("unconstrained shortest-path counts") {
    CHECK(shortest_path_count({0, 0, 0}) == 1);
    CHECK(shortest_path_count({1, 1, 1}) == 6);
    CHECK(shortest_path_count({2, 0, 1}) == 3);
    // against direct enumeration
    for (std::int64_t i = 0; i <= 4; ++i)
        for (std::int64_t j = 0; j <= 4; ++j)
            for (std::int64_t k = 0; k <= 4; ++k)
                CHECK(shortest_path_count({i, j, k}) ==
                      constrained_lattice_dp(kNoLadder, i, j, k));
}

TEST_CASE("ladder-constrained counts, worked values") {
    CHECK(ladder_shortest_path_count(0, {2, 1, 0}) == 2);
    CHECK(ladder_shortest_path_count(0, {1, 1, 1}) == 3);
    CHECK(ladder_shortest_path_count(1, {1, 2, 0}) == 2);
}

TEST_CASE("ladder count never exceeds the free count and never goes negative") {
    for (std::int64_t i = 0; i <= 12; ++i) {
        for (std::int64_t j = 0; i + j <= 12; ++j) {
            for (std::int64_t k = 0; i + j + k <= 12; ++k) {
                const LatticePoint p{i, j, k};
                const Count free = shortest_path_count(p);
                for (std::int64_t r = 0; r <= 6; ++r) {
                    const Count laddered = ladder_shortest_path_count(r, p);
                    CHECK(laddered >= 0);
                    CHECK(laddered <= free);
                    if (j <= r) CHECK(laddered == free);
                }
            }
        }
    }
}

TEST_CASE("reflection formula equals the constrained walk DP") {
    for (std::int64_t i = 0; i <= 10; ++i)
        for (std::int64_t j = 0; i + j <= 10; ++j)
            for (std::int64_t k = 0; i + j + k <= 10; ++k)
                for (std::int64_t r = 0; r <= 4; ++r)
                    CHECK(ladder_shortest_path_count(r, {i, j, k}) ==
                          constrained_lattice_dp(r, i, j, k));
}

TEST_CASE("lattice input validation") {
    CHECK_THROWS_AS(shortest_path_count({-1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(shortest_path_count({0, -2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ladder_shortest_path_count(-1, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ladder_shortest_path_count(0, {0, 0, -3}), std::invalid_argument);
}
