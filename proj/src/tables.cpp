#include "pathhom/tables.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

#include "pathhom/grid_counts.hpp"
#include "pathhom/path_counts.hpp"

namespace pathhom {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_spec(const TableSpec& spec) {
    if (spec.m_max < 1 || spec.n_max < 1)
        throw std::invalid_argument("table spec: ranges must be positive");
}

// The printed path tables list one anchor per reflection orbit (j and
// n-1-j count the same maps) and stop at j = 3.
bool path_cell_printed(const TableSpec& spec, std::int64_t m, std::int64_t j,
                       std::int64_t n) {
    if (m > n || j > n - 1) return false;
    if (spec.all_anchors) return true;
    return j <= 3 && 2 * j <= n - 1;
}

std::string kind_name(TableKind which) {
    switch (which) {
        case TableKind::WhomPath: return "whom-path";
        case TableKind::HomPath: return "hom-path";
        case TableKind::WhomGrid: return "whom-grid";
    }
    throw std::invalid_argument("table spec: unknown table kind");
}

std::string render_path_csv(const std::vector<PathTableCell>& cells) {
    std::ostringstream out;
    out << "m,j,n,count\n";
    for (const auto& cell : cells)
        out << cell.m << ',' << cell.j << ',' << cell.n << ','
            << to_decimal(cell.value) << '\n';
    return out.str();
}

std::string render_grid_csv(const std::vector<GridTableCell>& cells) {
    std::ostringstream out;
    out << "m,n,k,count\n";
    for (const auto& cell : cells)
        out << cell.m << ',' << cell.n << ',' << cell.k << ','
            << to_decimal(cell.value) << '\n';
    return out.str();
}

ordered_json spec_header(const TableSpec& spec) {
    ordered_json query;
    query["op"] = "table";
    query["which"] = kind_name(spec.which);
    query["m_max"] = spec.m_max;
    query["n_max"] = spec.n_max;
    if (spec.which != TableKind::WhomGrid) query["all_anchors"] = spec.all_anchors;
    ordered_json doc;
    doc["query"] = std::move(query);
    return doc;
}

std::string render_path_json(const TableSpec& spec,
                             const std::vector<PathTableCell>& cells) {
    ordered_json doc = spec_header(spec);
    auto& rows = doc["rows"] = ordered_json::array();
    for (const auto& cell : cells) {
        rows.push_back({{"m", cell.m},
                        {"j", cell.j},
                        {"n", cell.n},
                        {"count", to_decimal(cell.value)}});
    }
    return doc.dump() + "\n";
}

std::string render_grid_json(const TableSpec& spec,
                             const std::vector<GridTableCell>& cells) {
    ordered_json doc = spec_header(spec);
    auto& rows = doc["rows"] = ordered_json::array();
    for (const auto& cell : cells) {
        rows.push_back({{"m", cell.m},
                        {"n", cell.n},
                        {"k", cell.k},
                        {"count", to_decimal(cell.value)}});
    }
    return doc.dump() + "\n";
}

// Markdown keeps the tabular layout: one column per codomain size, blank
// cells where no count is defined or the anchor cap hides the row.
std::string render_path_md(const TableSpec& spec,
                           const std::vector<PathTableCell>& cells) {
    std::ostringstream out;
    out << "| m | j |";
    for (std::int64_t n = 2; n <= spec.n_max; ++n) out << " n=" << n << " |";
    out << "\n| --- | --- |";
    for (std::int64_t n = 2; n <= spec.n_max; ++n) out << " --- |";
    out << '\n';
    std::size_t pos = 0;
    for (std::int64_t m = 2; m <= spec.m_max; ++m) {
        const std::int64_t j_hi = spec.all_anchors ? spec.n_max - 1 : 3;
        for (std::int64_t j = 0; j <= j_hi; ++j) {
            std::ostringstream row;
            bool any = false;
            row << "| " << m << " | " << j << " |";
            for (std::int64_t n = 2; n <= spec.n_max; ++n) {
                if (pos < cells.size() && cells[pos].m == m && cells[pos].j == j &&
                    cells[pos].n == n) {
                    row << ' ' << to_decimal(cells[pos].value) << " |";
                    ++pos;
                    any = true;
                } else {
                    row << "  |";
                }
            }
            if (any) out << row.str() << '\n';
        }
    }
    return out.str();
}

std::string render_grid_md(const TableSpec& spec,
                           const std::vector<GridTableCell>& cells) {
    std::ostringstream out;
    out << "| m | n |";
    for (std::int64_t k = 2; k <= spec.n_max; ++k) out << " k=" << k << " |";
    out << "\n| --- | --- |";
    for (std::int64_t k = 2; k <= spec.n_max; ++k) out << " --- |";
    out << '\n';
    std::size_t pos = 0;
    for (std::int64_t m = 2; m <= spec.m_max; ++m) {
        for (std::int64_t n = m; n <= spec.n_max; ++n) {
            std::ostringstream row;
            bool any = false;
            row << "| " << m << " | " << n << " |";
            for (std::int64_t k = 2; k <= spec.n_max; ++k) {
                if (pos < cells.size() && cells[pos].m == m && cells[pos].n == n &&
                    cells[pos].k == k) {
                    row << ' ' << to_decimal(cells[pos].value) << " |";
                    ++pos;
                    any = true;
                } else {
                    row << "  |";
                }
            }
            if (any) out << row.str() << '\n';
        }
    }
    return out.str();
}

}  // namespace

std::vector<PathTableCell> path_table_cells(const TableSpec& spec) {
    check_spec(spec);
    if (spec.which == TableKind::WhomGrid)
        throw std::invalid_argument("path_table_cells: spec names the grid table");
    std::vector<PathTableCell> cells;
    const std::int64_t j_hi = spec.all_anchors ? spec.n_max - 1 : 3;
    for (std::int64_t m = 2; m <= spec.m_max; ++m) {
        for (std::int64_t j = 0; j <= j_hi; ++j) {
            for (std::int64_t n = std::max<std::int64_t>(m, 2); n <= spec.n_max; ++n) {
                if (!path_cell_printed(spec, m, j, n)) continue;
                Count value = spec.which == TableKind::WhomPath
                                  ? whom_anchored(m, n, j)
                                  : hom_anchored(m, n, j);
                cells.push_back({m, j, n, std::move(value)});
            }
        }
    }
    return cells;
}

std::vector<GridTableCell> grid_table_cells(const TableSpec& spec) {
    check_spec(spec);
    if (spec.which != TableKind::WhomGrid)
        throw std::invalid_argument("grid_table_cells: spec names a path table");
    std::vector<GridTableCell> cells;
    for (std::int64_t m = 2; m <= spec.m_max; ++m)
        for (std::int64_t n = m; n <= spec.n_max; ++n)
            for (std::int64_t k = m; k <= spec.n_max; ++k)
                cells.push_back({m, n, k, whom_grid_total(m, n, k)});
    return cells;
}

std::string render_table(const TableSpec& spec) {
    check_spec(spec);
    if (spec.which == TableKind::WhomGrid) {
        const auto cells = grid_table_cells(spec);
        switch (spec.format) {
            case TableFormat::Csv: return render_grid_csv(cells);
            case TableFormat::Json: return render_grid_json(spec, cells);
            case TableFormat::Markdown: return render_grid_md(spec, cells);
        }
    } else {
        const auto cells = path_table_cells(spec);
        switch (spec.format) {
            case TableFormat::Csv: return render_path_csv(cells);
            case TableFormat::Json: return render_path_json(spec, cells);
            case TableFormat::Markdown: return render_path_md(spec, cells);
        }
    }
    throw std::invalid_argument("table spec: unknown format");
}

}  // namespace pathhom
