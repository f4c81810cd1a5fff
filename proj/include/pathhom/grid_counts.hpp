#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "pathhom/count.hpp"

namespace pathhom {

/// Image of vertex 0 inside the grid P_n x P_k: first coordinate along the
/// n-axis, second along the k-axis.
struct GridAnchor {
    std::int64_t i = 0;
    std::int64_t j = 0;
    auto operator<=>(const GridAnchor&) const = default;
};

/// One anchored (or total) path-into-grid counting problem.
struct GridQuery {
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::int64_t k = 1;
    std::optional<GridAnchor> anchor;
};

/// Throws std::invalid_argument unless m,n,k >= 1 and the anchor (when
/// present) satisfies 0 <= i < n, 0 <= j < k.
void validate(const GridQuery& q);

/// Number of weak homomorphisms P_m -> P_n x P_k with vertex 0 anchored.
/// Interleaving convolution: split the m-1 steps into h moves along the
/// n-axis (a strict walk there) and m-1-h moves-or-stays along the k-axis.
Count whom_grid_anchored(const GridQuery& q);

inline Count whom_grid_anchored(std::int64_t m, std::int64_t n, std::int64_t k,
                                std::int64_t i, std::int64_t j) {
    return whom_grid_anchored(GridQuery{m, n, k, GridAnchor{i, j}});
}

/// Total over all n*k anchors, computed with the parity-weighted symmetry
/// decomposition (one anchored evaluation per reflection orbit).
Count whom_grid_total(std::int64_t m, std::int64_t n, std::int64_t k);

/// Orbit of (i,j) under the two grid reflections i -> n-1-i, j -> k-1-j.
/// Sorted, deduplicated; size 1, 2, or 4.
std::vector<GridAnchor> anchor_orbit(std::int64_t n, std::int64_t k,
                                     std::int64_t i, std::int64_t j);

}  // namespace pathhom
