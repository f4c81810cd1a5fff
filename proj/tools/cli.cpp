#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "pathhom/grid_counts.hpp"
#include "pathhom/lattice.hpp"
#include "pathhom/path_counts.hpp"
#include "pathhom/tables.hpp"
#include "pathhom/verify.hpp"

namespace pathhom::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void print_count(std::ostream& out, const std::string& format,
                 const ordered_json& query, const Count& value) {
    if (format == "json") {
        ordered_json doc;
        doc["query"] = query;
        doc["count"] = to_decimal(value);
        out << doc.dump() << '\n';
    } else {
        out << to_decimal(value) << '\n';
    }
}

struct PathCmd {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t j = 0;
    std::string format = "text";
    CLI::Option* j_opt = nullptr;

    CLI::App* attach(CLI::App& app, const std::string& name, const std::string& what) {
        CLI::App* sub = app.add_subcommand(name, "Count " + what + " from P_m to P_n");
        sub->add_option("--m", m, "order of the domain path")->required();
        sub->add_option("--n", n, "order of the codomain path")->required();
        j_opt = sub->add_option("--j", j, "anchor: image of vertex 0 (omit for the total)");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    }

    int run(std::ostream& out, bool weak) const {
        ordered_json query{{"op", weak ? "whom-path" : "hom-path"}, {"m", m}, {"n", n}};
        Count value;
        if (j_opt->count() > 0) {
            query["j"] = j;
            value = weak ? whom_anchored(m, n, j) : hom_anchored(m, n, j);
        } else {
            value = weak ? whom_total(m, n) : hom_total(m, n);
        }
        print_count(out, format, query, value);
        return 0;
    }
};

struct GridCmd {
    std::int64_t m = 0, n = 0, k = 0;
    std::int64_t i = 0, j = 0;
    std::string format = "text";
    CLI::Option* i_opt = nullptr;
    CLI::Option* j_opt = nullptr;

    CLI::App* attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand(
            "whom-grid", "Count weak homomorphisms from P_m to the grid P_n x P_k");
        sub->add_option("--m", m, "order of the domain path")->required();
        sub->add_option("--n", n, "first grid dimension")->required();
        sub->add_option("--k", k, "second grid dimension")->required();
        i_opt = sub->add_option("--i", i, "anchor, first coordinate");
        j_opt = sub->add_option("--j", j, "anchor, second coordinate");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    }

    int run(std::ostream& out, std::ostream& err) const {
        if ((i_opt->count() > 0) != (j_opt->count() > 0)) {
            err << "whom-grid: provide both --i and --j, or neither\n";
            return 2;
        }
        ordered_json query{{"op", "whom-grid"}, {"m", m}, {"n", n}, {"k", k}};
        Count value;
        if (i_opt->count() > 0) {
            query["i"] = i;
            query["j"] = j;
            value = whom_grid_anchored(m, n, k, i, j);
        } else {
            value = whom_grid_total(m, n, k);
        }
        print_count(out, format, query, value);
        return 0;
    }
};

struct LatticeCmd {
    std::int64_t i = 0, j = 0, k = 0, r = 0;
    std::string format = "text";
    CLI::Option* r_opt = nullptr;

    CLI::App* attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand(
            "lattice", "Count monotone shortest paths to (i,j,k) in the cubic lattice");
        sub->add_option("--i", i, "steps along the first axis")->required();
        sub->add_option("--j", j, "steps along the second axis")->required();
        sub->add_option("--k", k, "steps along the third axis")->required();
        r_opt = sub->add_option(
            "--r", r, "ladder width: restrict to points with j - i <= r (omit for none)");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    }

    int run(std::ostream& out) const {
        ordered_json query{{"op", "lattice"}, {"i", i}, {"j", j}, {"k", k}};
        const LatticePoint p{i, j, k};
        Count value;
        if (r_opt->count() > 0) {
            query["r"] = r;
            value = ladder_shortest_path_count(r, p);
        } else {
            value = shortest_path_count(p);
        }
        print_count(out, format, query, value);
        return 0;
    }
};

struct TableCmd {
    std::string which;
    std::string format = "csv";
    std::int64_t m_max = 8;
    std::int64_t n_max = 8;
    bool all_anchors = false;

    CLI::App* attach(CLI::App& app) {
        CLI::App* sub =
            app.add_subcommand("table", "Emit a reference table over a parameter range");
        sub->add_option("--which", which, "table to emit")
            ->required()
            ->check(CLI::IsMember({"whom-path", "hom-path", "whom-grid"}));
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json", "md"}));
        sub->add_option("--m-max", m_max, "largest domain order (default 8)");
        sub->add_option("--n-max", n_max, "largest codomain dimension (default 8)");
        sub->add_flag("--all-anchors", all_anchors,
                      "path tables: every anchor 0..n-1, not one per reflection orbit");
        return sub;
    }

    int run(std::ostream& out) const {
        TableSpec spec;
        spec.which = which == "whom-path"  ? TableKind::WhomPath
                     : which == "hom-path" ? TableKind::HomPath
                                           : TableKind::WhomGrid;
        spec.format = format == "csv"    ? TableFormat::Csv
                      : format == "json" ? TableFormat::Json
                                         : TableFormat::Markdown;
        spec.m_max = m_max;
        spec.n_max = n_max;
        spec.all_anchors = all_anchors;
        out << render_table(spec);
        return 0;
    }
};

struct VerifyCmd {
    std::int64_t max_m = 0, max_n = 0, max_k = 0;
    std::string mode = "dp";

    CLI::App* attach(CLI::App& app) {
        CLI::App* sub = app.add_subcommand(
            "verify", "Compare the closed forms against oracle counters over a range");
        sub->add_option("--max-m", max_m, "largest domain order")->required();
        sub->add_option("--max-n", max_n, "largest path/grid first dimension")->required();
        sub->add_option("--max-k", max_k, "largest grid second dimension")->required();
        sub->add_option("--mode", mode, "oracle selection (default dp)")
            ->check(CLI::IsMember({"dp", "brute-force", "both"}));
        return sub;
    }

    int run(std::ostream& out) const {
        const OracleMode oracle = mode == "dp"           ? OracleMode::Dp
                                  : mode == "brute-force" ? OracleMode::BruteForce
                                                          : OracleMode::Both;
        const VerificationReport report = run_verification(max_m, max_n, max_k, oracle);
        ordered_json doc;
        doc["query"] = {{"max_m", max_m}, {"max_n", max_n}, {"max_k", max_k}, {"mode", mode}};
        doc["report"] = ordered_json::parse(report_to_json(report));
        out << doc.dump() << '\n';
        return report.fail == 0 ? 0 : 1;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of homomorphisms and weak homomorphisms from paths "
                 "into paths and rectangular grids",
                 "pathhom"};
    app.require_subcommand(1);

    PathCmd hom_path, whom_path;
    GridCmd grid;
    LatticeCmd lattice;
    TableCmd table;
    VerifyCmd verify;

    CLI::App* hom_sub = hom_path.attach(app, "hom-path", "homomorphisms");
    CLI::App* whom_sub = whom_path.attach(app, "whom-path", "weak homomorphisms");
    CLI::App* grid_sub = grid.attach(app);
    CLI::App* lattice_sub = lattice.attach(app);
    CLI::App* table_sub = table.attach(app);
    CLI::App* verify_sub = verify.attach(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hom_sub->parsed()) return hom_path.run(out, /*weak=*/false);
        if (whom_sub->parsed()) return whom_path.run(out, /*weak=*/true);
        if (grid_sub->parsed()) return grid.run(out, err);
        if (lattice_sub->parsed()) return lattice.run(out);
        if (table_sub->parsed()) return table.run(out);
        if (verify_sub->parsed()) return verify.run(out);
    } catch (const std::invalid_argument& e) {
        err << "pathhom: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "pathhom: " << e.what() << '\n';
        return 2;
    }
    err << "pathhom: no subcommand given\n";
    return 2;
}

}  // namespace pathhom::cli
