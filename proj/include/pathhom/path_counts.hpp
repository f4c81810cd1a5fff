#pragma once

#include <cstdint>
#include <optional>

#include "pathhom/count.hpp"

namespace pathhom {

/// One anchored (or total) path-to-path counting problem: maps from the path
/// on m vertices into the path on n vertices, optionally with the image of
/// vertex 0 pinned to `anchor`.
struct PathQuery {
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::optional<std::int64_t> anchor;
};

/// Throws std::invalid_argument unless m,n >= 1 and anchor (when present)
/// lies in [0, n-1].
void validate(const PathQuery& q);

/// Number of homomorphisms P_m -> P_n with vertex 0 mapped to the anchor;
/// equivalently walks of m vertices in P_n starting there. Closed form,
/// valid for all m, n >= 1.
Count hom_anchored(const PathQuery& q);

/// Same count by the reduced three-sum closed form. Only valid for m <= n;
/// throws std::domain_error otherwise. Kept as an independent algebraic
/// route for cross-checking hom_anchored.
Count hom_anchored_reduced(const PathQuery& q);

/// Number of weak homomorphisms P_m -> P_n with vertex 0 anchored, by the
/// four-case shortest-path decomposition. Requires m <= n (std::domain_error
/// otherwise).
Count whom_anchored_closed(const PathQuery& q);

/// Transfer-matrix walk counter on P_n: length-(m-1) step sequences where
/// each step moves to an adjacent vertex, or may also stay in place when
/// allow_stay is set. Starts at the anchor when present, else sums over all
/// starts. Exact for every parameter combination; doubles as the closed
/// forms' verifier.
Count path_walk_dp(const PathQuery& q, bool allow_stay);

/// Anchored weak-homomorphism count for any m, n: the closed form when
/// m <= n, the DP fallback otherwise.
Count whom_anchored(const PathQuery& q);

/// Totals over all anchors.
Count hom_total(std::int64_t m, std::int64_t n);
Count whom_total(std::int64_t m, std::int64_t n);

// int-argument conveniences
inline Count hom_anchored(std::int64_t m, std::int64_t n, std::int64_t j) {
    return hom_anchored(PathQuery{m, n, j});
}
inline Count hom_anchored_reduced(std::int64_t m, std::int64_t n, std::int64_t j) {
    return hom_anchored_reduced(PathQuery{m, n, j});
}
inline Count whom_anchored_closed(std::int64_t m, std::int64_t n, std::int64_t j) {
    return whom_anchored_closed(PathQuery{m, n, j});
}
inline Count whom_anchored(std::int64_t m, std::int64_t n, std::int64_t j) {
    return whom_anchored(PathQuery{m, n, j});
}

}  // namespace pathhom
