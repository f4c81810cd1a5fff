#include "pathhom/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathhom {

Count count_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("count: empty string");
    const bool neg = s[0] == '-';
    for (std::size_t p = neg ? 1 : 0; p < s.size(); ++p) {
        if (s[p] < '0' || s[p] > '9')
            throw std::invalid_argument("count: not a decimal integer: " + s);
    }
    if (neg) throw std::invalid_argument("count: negative value: " + s);
    if (s.size() == (neg ? 1u : 0u))
        throw std::invalid_argument("count: not a decimal integer: " + s);
    return Count(s);
}

Count binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count result = 1;
    // result stays integral after each division: it is C(n-k+t, t)
    for (std::int64_t t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t;
    }
    return result;
}

Count multinomial3(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 0 || b < 0 || c < 0) return 0;
    return binomial(a + b + c, a) * binomial(b + c, b);
}

}  // namespace pathhom
