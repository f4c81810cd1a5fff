#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pathhom/count.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = pathhom::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count subcommands print bare decimals") {
    auto r = run_cli({"whom-path", "--m", "4", "--n", "5", "--j", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "13\n");

    r = run_cli({"whom-grid", "--m", "4", "--n", "4", "--k", "5", "--i", "0", "--j", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "43\n");

    r = run_cli({"lattice", "--i", "2", "--j", "1", "--k", "0", "--r", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    r = run_cli({"lattice", "--i", "1", "--j", "1", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");

    r = run_cli({"hom-path", "--m", "4", "--n", "5", "--j", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");
}

TEST_CASE("omitting the anchor yields totals") {
    auto r = run_cli({"whom-path", "--m", "4", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "95\n");
    r = run_cli({"whom-grid", "--m", "8", "--n", "8", "--k", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "2951832\n");
    r = run_cli({"hom-path", "--m", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("json output echoes the query and keeps counts as strings") {
    auto r = run_cli({"whom-path", "--m", "4", "--n", "5", "--j", "0",
                      "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["query"]["op"] == "whom-path");
    CHECK(doc["query"]["m"] == 4);
    CHECK(doc["query"]["n"] == 5);
    CHECK(doc["query"]["j"] == 0);
    CHECK(doc["count"] == "13");
    CHECK(doc["count"].is_string());
}

TEST_CASE("usage errors exit 2 with a diagnostic") {
    auto r = run_cli({"whom-path", "--m", "4"});  // missing --n
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    r = run_cli({"whom-path", "--m", "4", "--n", "5", "--j", "9"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    r = run_cli({"whom-grid", "--m", "2", "--n", "2", "--k", "2", "--i", "0"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    r = run_cli({"hom-path", "--m", "4", "--n", "5", "--format", "yaml"});
    CHECK(r.code == 2);

    r = run_cli({"no-such-command"});
    CHECK(r.code == 2);

    r = run_cli({});
    CHECK(r.code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"table", "--help"}).code == 0);
}

TEST_CASE("table subcommand emits the reference rows") {
    auto r = run_cli({"table", "--which", "whom-grid", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("8,8,8,2951832\n") != std::string::npos);

    r = run_cli({"table", "--which", "hom-path", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5,2,7,14\n") != std::string::npos);

    r = run_cli({"table", "--which", "whom-path", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2,0,2,2\n") != std::string::npos);

    // byte-identical across runs
    const auto again = run_cli({"table", "--which", "whom-path", "--format", "csv"});
    CHECK(again.out == r.out);

    CHECK(run_cli({"table", "--which", "nope"}).code == 2);
    CHECK(run_cli({"table", "--which", "whom-path", "--m-max", "0"}).code == 2);
}

TEST_CASE("big counts survive the JSON format losslessly") {
    const auto r = run_cli({"whom-grid", "--m", "40", "--n", "12", "--k", "12",
                            "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["count"].is_string());
    const auto text = doc["count"].get<std::string>();
    CHECK(text.size() > 19);  // past the 64-bit range
    CHECK(pathhom::to_decimal(pathhom::count_from_decimal(text)) == text);
}

TEST_CASE("verify subcommand reports and exits by agreement") {
    auto r = run_cli({"verify", "--max-m", "3", "--max-n", "3", "--max-k", "3",
                      "--mode", "both"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["query"]["mode"] == "both");
    CHECK(doc["report"]["summary"]["fail"] == 0);
    CHECK(doc["report"]["summary"]["total"] ==
          doc["report"]["checks"].size());

    r = run_cli({"verify", "--max-m", "5", "--max-n", "4", "--max-k", "4",
                 "--mode", "brute-force"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["report"]["summary"]["fail"] == 0);

    r = run_cli({"verify", "--max-m", "8", "--max-n", "8", "--max-k", "8",
                 "--mode", "dp"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["report"]["summary"]["fail"] == 0);

    CHECK(run_cli({"verify", "--max-m", "0", "--max-n", "3", "--max-k", "3"}).code == 2);
    CHECK(run_cli({"verify", "--max-m", "8", "--max-n", "8", "--max-k", "8",
                   "--mode", "brute-force"})
              .code == 2);
}
