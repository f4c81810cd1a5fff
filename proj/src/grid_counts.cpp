#include "pathhom/grid_counts.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathhom/combinatorics.hpp"
#include "pathhom/path_counts.hpp"

namespace pathhom {

void validate(const GridQuery& q) {
    if (q.m < 1) throw std::invalid_argument("grid query: m must be >= 1");
    if (q.n < 1) throw std::invalid_argument("grid query: n must be >= 1");
    if (q.k < 1) throw std::invalid_argument("grid query: k must be >= 1");
    if (q.anchor) {
        if (q.anchor->i < 0 || q.anchor->i >= q.n)
            throw std::invalid_argument("grid query: anchor i must lie in [0, n-1]");
        if (q.anchor->j < 0 || q.anchor->j >= q.k)
            throw std::invalid_argument("grid query: anchor j must lie in [0, k-1]");
    }
}

Count whom_grid_anchored(const GridQuery& q) {
    validate(q);
    if (!q.anchor) throw std::invalid_argument("grid query: anchor required");
    const std::int64_t m = q.m;
    // Choose which h of the m-1 steps move along the n-axis; those form a
    // strict walk from anchor.i, the remaining steps (moves and stays) a
    // weak one from anchor.j. The weak factor's domain m-h can exceed k,
    // hence the dispatching whom_anchored.
    Count total = 0;
    for (std::int64_t h = 0; h <= m - 1; ++h) {
        total += binomial(m - 1, h) *
                 hom_anchored(h + 1, q.n, q.anchor->i) *
                 whom_anchored(m - h, q.k, q.anchor->j);
    }
    return total;
}

std::vector<GridAnchor> anchor_orbit(std::int64_t n, std::int64_t k,
                                     std::int64_t i, std::int64_t j) {
    validate(GridQuery{1, n, k, GridAnchor{i, j}});
    std::vector<GridAnchor> orbit{
        {i, j}, {n - 1 - i, j}, {i, k - 1 - j}, {n - 1 - i, k - 1 - j}};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

Count whom_grid_total(std::int64_t m, std::int64_t n, std::int64_t k) {
    validate(GridQuery{m, n, k, std::nullopt});
    // Anchored counts are constant on reflection orbits, so sum one
    // representative per orbit: interior orbits have size 4, midline orbits
    // (odd n or odd k) size 2, and the double-midline fixed point size 1.
    const std::int64_t half_n = n / 2;
    const std::int64_t half_k = k / 2;
    Count quadrant = 0;
    for (std::int64_t i = 0; i < half_n; ++i)
        for (std::int64_t j = 0; j < half_k; ++j)
            quadrant += whom_grid_anchored(m, n, k, i, j);
    Count total = 4 * quadrant;
    if (n % 2 == 1) {
        for (std::int64_t j = 0; j < half_k; ++j)
            total += 2 * whom_grid_anchored(m, n, k, half_n, j);
    }
    if (k % 2 == 1) {
        for (std::int64_t i = 0; i < half_n; ++i)
            total += 2 * whom_grid_anchored(m, n, k, i, half_k);
    }
    if (n % 2 == 1 && k % 2 == 1)
        total += whom_grid_anchored(m, n, k, half_n, half_k);
    return total;
}

}  // namespace pathhom
