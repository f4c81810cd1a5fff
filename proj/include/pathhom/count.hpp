#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pathhom {

/// Exact nonnegative integer, arbitrary precision. Every counting operation
/// in this library returns one; counts are serialized as decimal strings so
/// values survive JSON without 53-bit truncation.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

/// Parses a decimal string into a Count. Throws std::invalid_argument on
/// malformed input or negative values.
Count count_from_decimal(const std::string& s);

}  // namespace pathhom
