#include "pathhom/path_counts.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pathhom/combinatorics.hpp"

namespace pathhom {

void validate(const PathQuery& q) {
    if (q.m < 1) throw std::invalid_argument("path query: m must be >= 1");
    if (q.n < 1) throw std::invalid_argument("path query: n must be >= 1");
    if (q.anchor && (*q.anchor < 0 || *q.anchor >= q.n))
        throw std::invalid_argument("path query: anchor must lie in [0, n-1]");
}

namespace {

std::int64_t require_anchor(const PathQuery& q) {
    validate(q);
    if (!q.anchor) throw std::invalid_argument("path query: anchor required");
    return *q.anchor;
}

}  // namespace

Count hom_anchored(const PathQuery& q) {
    const std::int64_t j = require_anchor(q);
    const std::int64_t m = q.m, n = q.n;
    // Signed reflection sum over all mirror images of the walk's endpoint.
    // Valid for every m, n >= 1; terms outside [0, m-1] vanish by the
    // zero-outside-domain convention and individual t-shells may contribute
    // negatively, only the full sum is a count.
    const std::int64_t lo = std::max<std::int64_t>(0, ceil_div(m - j - 1, 2));
    const std::int64_t hi = std::min(m - 1, floor_div(m + n - j - 2, 2));
    const std::int64_t span = (m + n) / n;
    Count total = 0;
    for (std::int64_t i = lo; i <= hi; ++i) {
        for (std::int64_t t = -span; t <= span; ++t) {
            total += binomial(m - 1, i - t * (n + 1));
            total -= binomial(m - 1, i + j - t * (n + 1) + 1);
        }
    }
    return total;
}

Count hom_anchored_reduced(const PathQuery& q) {
    const std::int64_t j = require_anchor(q);
    const std::int64_t m = q.m, n = q.n;
    if (m > n)
        throw std::domain_error("hom_anchored_reduced requires m <= n");
    // With m <= n only the unreflected images survive; the double sum
    // collapses to three runs of binomials.
    Count total = 0;
    for (std::int64_t t = std::max<std::int64_t>(0, ceil_div(j - (n - m), 2));
         t <= ceil_div(m + j, 2) - 1; ++t)
        total += binomial(m - 1, t);
    for (std::int64_t t = 0; t <= floor_div(j - (n - m), 2) - 1; ++t)
        total -= binomial(m - 1, t);
    for (std::int64_t t = 0; t <= floor_div(m - j - 1, 2) - 1; ++t)
        total -= binomial(m - 1, t);
    return total;
}

Count whom_anchored_closed(const PathQuery& q) {
    const std::int64_t j = require_anchor(q);
    const std::int64_t m = q.m, n = q.n;
    if (m > n)
        throw std::domain_error("whom_anchored_closed requires m <= n");

    // Each map is a monotone lattice path of m-1 steps: `ups` moves toward
    // vertex n-1, `downs` moves toward vertex 0, the rest stays. A map is
    // valid iff its running position never leaves [0, n-1]. m <= n keeps the
    // two walls independent, so the endpoints split into four regions.
    const std::int64_t steps = m - 1;
    const std::int64_t room = n - j - 1;  // distance from the anchor to the top
    Count total = 0;

    // Endpoints with downs > j: only the lower wall is reachable; count by
    // reflecting the offending paths across it (ladder width j).
    for (std::int64_t downs = j + 1; downs <= j + floor_div(m - j - 1, 2); ++downs) {
        for (std::int64_t ups = downs - j; ups <= steps - downs; ++ups) {
            const std::int64_t stays = steps - ups - downs;
            total += multinomial3(ups, downs, stays);
            total -= multinomial3(downs - j - 1, ups + j + 1, stays);
        }
    }

    // Endpoints close enough to the anchor that no wall can be hit: every
    // interleaving is valid.
    for (std::int64_t downs = std::max<std::int64_t>(j - n + m + 1, 0); downs <= j;
         ++downs) {
        for (std::int64_t ups = 0; ups <= steps - downs; ++ups)
            total += multinomial3(ups, downs, steps - ups - downs);
    }
    for (std::int64_t downs = 0; downs <= j - n + m; ++downs) {
        for (std::int64_t ups = 0; ups <= room; ++ups)
            total += multinomial3(ups, downs, steps - ups - downs);
    }

    // Endpoints with ups > room: the upper wall, same reflection with the
    // axes swapped (ladder width room).
    for (std::int64_t ups = room + 1; ups <= room + floor_div(j - n + m, 2); ++ups) {
        for (std::int64_t downs = ups - room; downs <= steps - ups; ++downs) {
            const std::int64_t stays = steps - ups - downs;
            total += multinomial3(downs, ups, stays);
            total -= multinomial3(ups - room - 1, downs + room + 1, stays);
        }
    }
    return total;
}

Count path_walk_dp(const PathQuery& q, bool allow_stay) {
    validate(q);
    const auto size = static_cast<std::size_t>(q.n);
    std::vector<Count> cur(size, 0);
    if (q.anchor) {
        cur[static_cast<std::size_t>(*q.anchor)] = 1;
    } else {
        std::fill(cur.begin(), cur.end(), Count(1));
    }
    std::vector<Count> next(size);
    for (std::int64_t step = 1; step < q.m; ++step) {
        for (std::size_t v = 0; v < size; ++v) {
            Count acc = allow_stay ? cur[v] : Count(0);
            if (v > 0) acc += cur[v - 1];
            if (v + 1 < size) acc += cur[v + 1];
            next[v] = std::move(acc);
        }
        cur.swap(next);
    }
    Count total = 0;
    for (const Count& c : cur) total += c;
    return total;
}

Count whom_anchored(const PathQuery& q) {
    require_anchor(q);
    // The closed form's m <= n hypothesis is real: with a domain longer than
    // the codomain a walk can touch both walls, which the four-case split
    // cannot see. The DP covers that region exactly.
    if (q.m <= q.n) return whom_anchored_closed(q);
    return path_walk_dp(q, /*allow_stay=*/true);
}

Count hom_total(std::int64_t m, std::int64_t n) {
    validate(PathQuery{m, n, std::nullopt});
    Count total = 0;
    for (std::int64_t j = 0; j < n; ++j) total += hom_anchored(PathQuery{m, n, j});
    return total;
}

Count whom_total(std::int64_t m, std::int64_t n) {
    validate(PathQuery{m, n, std::nullopt});
    Count total = 0;
    for (std::int64_t j = 0; j < n; ++j) total += whom_anchored(PathQuery{m, n, j});
    return total;
}

}  // namespace pathhom
