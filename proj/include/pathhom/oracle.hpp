#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pathhom/count.hpp"

namespace pathhom {

/// Undirected, loop-free graph on vertices 0..order-1 with sorted adjacency
/// lists. The ground-truth counting engines below run on these.
class SimpleGraph {
public:
    explicit SimpleGraph(std::int64_t order);

    /// Inserts the undirected edge {u,v}. Rejects loops and out-of-range
    /// endpoints; inserting an existing edge is a no-op.
    void add_edge(std::int64_t u, std::int64_t v);

    std::int64_t order() const { return static_cast<std::int64_t>(adj_.size()); }
    std::int64_t edge_count() const;
    const std::vector<std::int64_t>& neighbors(std::int64_t v) const;
    bool adjacent(std::int64_t u, std::int64_t v) const;

private:
    std::vector<std::vector<std::int64_t>> adj_;
};

/// P_n: vertices 0..n-1, edges {i, i+1}. Rejects n < 1.
SimpleGraph path_graph(std::int64_t n);

/// Cartesian product: (a,u) ~ (b,v) iff (a=b and u~v) or (a~b and u=v).
/// Vertex (a,u) is encoded as a*order(g2)+u (row-major).
SimpleGraph cartesian_product(const SimpleGraph& g1, const SimpleGraph& g2);

/// Exhaustive depth-first enumeration of maps f : {0..m-1} -> V(g) whose
/// consecutive images are adjacent (weak=false) or adjacent-or-equal
/// (weak=true); f(0) pinned to anchor when given. Exponential in m; the
/// decisive ground truth at desk scale.
Count brute_force_count(std::int64_t m, const SimpleGraph& g,
                        std::optional<std::int64_t> anchor, bool weak);

/// Same contract as brute_force_count at cost O(m * |E|): iterated
/// vector-times-adjacency, with the identity added when weak.
Count dp_walk_count(std::int64_t m, const SimpleGraph& g,
                    std::optional<std::int64_t> anchor, bool weak);

}  // namespace pathhom
