#pragma once

#include <cstdint>

#include "pathhom/count.hpp"

namespace pathhom {

/// A point of the cubic lattice, identified by nonnegative step counts along
/// the three axes.
struct LatticePoint {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t k = 0;
};

/// M(i,j,k): number of monotone shortest paths from the origin to p in the
/// cubic lattice. Equals the trinomial coefficient of the step counts.
Count shortest_path_count(const LatticePoint& p);

/// M_r(i,j,k): shortest paths from the origin to p that stay inside the
/// r-ladder region {j - i <= r}, by the reflection principle:
/// trinomial(i,j,k) - trinomial(j-r-1, i+r+1, k). Requires r >= 0.
Count ladder_shortest_path_count(std::int64_t r, const LatticePoint& p);

}  // namespace pathhom
