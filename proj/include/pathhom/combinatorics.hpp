#pragma once

#include <cstdint>

#include "pathhom/count.hpp"

namespace pathhom {

// Binomial and trinomial coefficients extended by the zero-outside-domain
// convention: any index combination outside the classical domain counts as 0.
// The closed-form counting formulas rely on this so their summation bounds
// can be transcribed literally, without per-term guards.

/// C(n,k); 0 when k < 0, k > n, or n < 0.
Count binomial(std::int64_t n, std::int64_t k);

/// (a+b+c)! / (a! b! c!); 0 when any argument is negative.
Count multinomial3(std::int64_t a, std::int64_t b, std::int64_t c);

// Exact integer division with floor/ceil semantics for negative numerators.
// The formula bounds use these; float rounding is never acceptable here.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    const std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

}  // namespace pathhom
