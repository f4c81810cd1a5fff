#include "pathhom/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pathhom {

SimpleGraph::SimpleGraph(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("graph order must be >= 1");
    adj_.resize(static_cast<std::size_t>(order));
}

void SimpleGraph::add_edge(std::int64_t u, std::int64_t v) {
    if (u < 0 || u >= order() || v < 0 || v >= order())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    auto insert = [this](std::int64_t a, std::int64_t b) {
        auto& nbrs = adj_[static_cast<std::size_t>(a)];
        const auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), b);
        if (pos == nbrs.end() || *pos != b) nbrs.insert(pos, b);
    };
    insert(u, v);
    insert(v, u);
}

std::int64_t SimpleGraph::edge_count() const {
    std::int64_t twice = 0;
    for (const auto& nbrs : adj_) twice += static_cast<std::int64_t>(nbrs.size());
    return twice / 2;
}

const std::vector<std::int64_t>& SimpleGraph::neighbors(std::int64_t v) const {
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex out of range");
    return adj_[static_cast<std::size_t>(v)];
}

bool SimpleGraph::adjacent(std::int64_t u, std::int64_t v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

SimpleGraph path_graph(std::int64_t n) {
    SimpleGraph g(n);
    for (std::int64_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph cartesian_product(const SimpleGraph& g1, const SimpleGraph& g2) {
    const std::int64_t n1 = g1.order();
    const std::int64_t n2 = g2.order();
    SimpleGraph product(n1 * n2);
    for (std::int64_t a = 0; a < n1; ++a) {
        for (std::int64_t u = 0; u < n2; ++u) {
            const std::int64_t v = a * n2 + u;
            for (std::int64_t w : g2.neighbors(u))
                if (w > u) product.add_edge(v, a * n2 + w);
            for (std::int64_t b : g1.neighbors(a))
                if (b > a) product.add_edge(v, b * n2 + u);
        }
    }
    return product;
}

namespace {

void check_walk_args(std::int64_t m, const SimpleGraph& g,
                     const std::optional<std::int64_t>& anchor) {
    if (m < 1) throw std::invalid_argument("walk length m must be >= 1");
    if (anchor && (*anchor < 0 || *anchor >= g.order()))
        throw std::invalid_argument("anchor is not a vertex of the graph");
}

// Depth-first extension, neighbors in ascending label order, the stay step
// (weak only) first.
Count extend(const SimpleGraph& g, std::int64_t v, std::int64_t remaining, bool weak) {
    if (remaining == 0) return 1;
    Count total = weak ? extend(g, v, remaining - 1, weak) : Count(0);
    for (std::int64_t u : g.neighbors(v)) total += extend(g, u, remaining - 1, weak);
    return total;
}

}  // namespace

Count brute_force_count(std::int64_t m, const SimpleGraph& g,
                        std::optional<std::int64_t> anchor, bool weak) {
    check_walk_args(m, g, anchor);
    if (anchor) return extend(g, *anchor, m - 1, weak);
    Count total = 0;
    for (std::int64_t v = 0; v < g.order(); ++v) total += extend(g, v, m - 1, weak);
    return total;
}

Count dp_walk_count(std::int64_t m, const SimpleGraph& g,
                    std::optional<std::int64_t> anchor, bool weak) {
    check_walk_args(m, g, anchor);
    const auto size = static_cast<std::size_t>(g.order());
    std::vector<Count> cur(size, 0);
    if (anchor) {
        cur[static_cast<std::size_t>(*anchor)] = 1;
    } else {
        std::fill(cur.begin(), cur.end(), Count(1));
    }
    std::vector<Count> next(size);
    for (std::int64_t step = 1; step < m; ++step) {
        for (std::size_t v = 0; v < size; ++v) {
            Count acc = weak ? cur[v] : Count(0);
            for (std::int64_t u : g.neighbors(static_cast<std::int64_t>(v)))
                acc += cur[static_cast<std::size_t>(u)];
            next[v] = std::move(acc);
        }
        cur.swap(next);
    }
    Count total = 0;
    for (const Count& c : cur) total += c;
    return total;
}

}  // namespace pathhom
