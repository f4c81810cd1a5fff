#include "pathhom/verify.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <stdexcept>

#include "pathhom/grid_counts.hpp"
#include "pathhom/oracle.hpp"
#include "pathhom/path_counts.hpp"

namespace pathhom {

namespace {

using ordered_json = nlohmann::ordered_json;

struct OracleSet {
    bool dp = false;
    bool brute = false;
};

void record(VerificationReport& report, VerificationCheck check) {
    check.agrees = check.formula_value == check.oracle_value;
    ++(check.agrees ? report.pass : report.fail);
    report.checks.push_back(std::move(check));
}

void check_path_queries(VerificationReport& report, std::int64_t max_m,
                        std::int64_t max_n, const OracleSet& oracles) {
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const SimpleGraph path = path_graph(n);
        for (std::int64_t m = 1; m <= max_m; ++m) {
            for (std::int64_t j = 0; j < n; ++j) {
                const Count hom = hom_anchored(m, n, j);
                const Count whom = whom_anchored(m, n, j);
                if (oracles.dp) {
                    record(report, {"hom-path", m, n, {}, {}, j, hom,
                                    dp_walk_count(m, path, j, false), false, "dp"});
                    record(report, {"whom-path", m, n, {}, {}, j, whom,
                                    dp_walk_count(m, path, j, true), false, "dp"});
                }
                if (oracles.brute) {
                    record(report,
                           {"hom-path", m, n, {}, {}, j, hom,
                            brute_force_count(m, path, j, false), false, "brute-force"});
                    record(report,
                           {"whom-path", m, n, {}, {}, j, whom,
                            brute_force_count(m, path, j, true), false, "brute-force"});
                }
            }
        }
    }
}

void check_grid_queries(VerificationReport& report, std::int64_t max_m,
                        std::int64_t max_n, std::int64_t max_k,
                        const OracleSet& oracles) {
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t k = 1; k <= max_k; ++k) {
            const SimpleGraph grid = cartesian_product(path_graph(n), path_graph(k));
            for (std::int64_t m = 1; m <= max_m; ++m) {
                for (std::int64_t i = 0; i < n; ++i) {
                    for (std::int64_t j = 0; j < k; ++j) {
                        const Count formula = whom_grid_anchored(m, n, k, i, j);
                        const std::int64_t vertex = i * k + j;
                        if (oracles.dp) {
                            record(report, {"whom-grid", m, n, k, i, j, formula,
                                            dp_walk_count(m, grid, vertex, true),
                                            false, "dp"});
                        }
                        if (oracles.brute) {
                            record(report, {"whom-grid", m, n, k, i, j, formula,
                                            brute_force_count(m, grid, vertex, true),
                                            false, "brute-force"});
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

VerificationReport run_verification(std::int64_t max_m, std::int64_t max_n,
                                    std::int64_t max_k, OracleMode mode) {
    if (max_m < 1 || max_n < 1 || max_k < 1)
        throw std::invalid_argument("verify: bounds must be positive");
    OracleSet oracles;
    oracles.dp = mode == OracleMode::Dp || mode == OracleMode::Both;
    oracles.brute = mode == OracleMode::BruteForce || mode == OracleMode::Both;
    // Exhaustive enumeration grows as (degree+1)^(m-1) per anchor; refuse
    // ranges where that stops being a desk-scale run. Bound the factors
    // before multiplying so the product cannot wrap.
    if (oracles.brute &&
        (max_m > 6 || max_n > 25 || max_k > 25 || max_n * max_k > 25))
        throw std::invalid_argument(
            "verify: brute-force mode is capped at max-m <= 6 and max-n*max-k <= 25");

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    check_path_queries(report, max_m, max_n, oracles);
    check_grid_queries(report, max_m, max_n, max_k, oracles);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

std::string report_to_json(const VerificationReport& report, int indent) {
    ordered_json doc;
    doc["summary"] = {{"pass", report.pass},
                      {"fail", report.fail},
                      {"total", static_cast<std::int64_t>(report.checks.size())}};
    doc["elapsed_ms"] = report.elapsed_ms;
    auto& checks = doc["checks"] = ordered_json::array();
    for (const auto& check : report.checks) {
        ordered_json query;
        query["op"] = check.op;
        query["m"] = check.m;
        query["n"] = check.n;
        if (check.k) query["k"] = *check.k;
        if (check.i) query["i"] = *check.i;
        query["j"] = check.j;
        checks.push_back({{"query", std::move(query)},
                          {"formula_value", to_decimal(check.formula_value)},
                          {"oracle_value", to_decimal(check.oracle_value)},
                          {"agrees", check.agrees},
                          {"oracle_kind", check.oracle_kind}});
    }
    return doc.dump(indent) + "\n";
}

}  // namespace pathhom
