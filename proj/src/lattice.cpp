#include "pathhom/lattice.hpp"

#include <stdexcept>

#include "pathhom/combinatorics.hpp"

namespace pathhom {

namespace {

void check(const LatticePoint& p) {
    if (p.i < 0 || p.j < 0 || p.k < 0)
        throw std::invalid_argument("lattice point coordinates must be nonnegative");
}

}  // namespace

Count shortest_path_count(const LatticePoint& p) {
    check(p);
    return multinomial3(p.i, p.j, p.k);
}

Count ladder_shortest_path_count(std::int64_t r, const LatticePoint& p) {
    check(p);
    if (r < 0) throw std::invalid_argument("ladder bound must be nonnegative");
    // Reflection principle: paths leaving {j - i <= r} correspond to paths
    // whose first two step counts are swapped across the wall. The
    // subtracted term vanishes (negative index) whenever p.j <= r. For
    // endpoints outside the region the difference is nonpositive while the
    // true count is zero, so clamp there.
    const Count difference = multinomial3(p.i, p.j, p.k) -
                             multinomial3(p.j - r - 1, p.i + r + 1, p.k);
    return difference < 0 ? Count(0) : difference;
}

}  // namespace pathhom
