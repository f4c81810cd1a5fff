#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathhom/count.hpp"

namespace pathhom {

enum class OracleMode { Dp, BruteForce, Both };

/// One formula-vs-oracle comparison.
struct VerificationCheck {
    std::string op;  // "hom-path" | "whom-path" | "whom-grid"
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::optional<std::int64_t> k;  // grid checks only
    std::optional<std::int64_t> i;  // grid first-axis anchor
    std::int64_t j = 0;             // path anchor / grid second-axis anchor
    Count formula_value;
    Count oracle_value;
    bool agrees = false;
    std::string oracle_kind;  // "dp" | "brute-force"
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t elapsed_ms = 0;
};

/// Compares every anchored path query (hom and whom) with 1 <= m <= max_m,
/// 1 <= n <= max_n, and every anchored grid query with 1 <= k <= max_k,
/// against the selected oracle(s). Deterministic check order. Throws
/// std::invalid_argument on non-positive bounds, or when a brute-force mode
/// exceeds the guard max_m <= 6, max_n*max_k <= 25.
VerificationReport run_verification(std::int64_t max_m, std::int64_t max_n,
                                    std::int64_t max_k, OracleMode mode);

/// Report serialization used by the CLI; counts appear as decimal strings.
std::string report_to_json(const VerificationReport& report, int indent = -1);

}  // namespace pathhom
