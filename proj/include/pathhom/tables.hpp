#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathhom/count.hpp"

namespace pathhom {

enum class TableKind { WhomPath, HomPath, WhomGrid };
enum class TableFormat { Csv, Json, Markdown };

/// Which reference table to emit and how. The defaults reproduce the printed
/// ranges 2 <= m <= n(,k) <= 8.
struct TableSpec {
    TableKind which = TableKind::WhomPath;
    TableFormat format = TableFormat::Csv;
    std::int64_t m_max = 8;
    std::int64_t n_max = 8;
    // Path tables print anchors j <= min(3, floor((n-1)/2)) by default, the
    // reflection-reduced rows; all_anchors widens to the full 0..n-1 range.
    bool all_anchors = false;
};

struct PathTableCell {
    std::int64_t m, j, n;
    Count value;
};

struct GridTableCell {
    std::int64_t m, n, k;
    Count value;
};

/// The nonempty cells of the requested table, in emission order
/// ((m, j, n) for path tables, (m, n, k) for the grid table).
std::vector<PathTableCell> path_table_cells(const TableSpec& spec);
std::vector<GridTableCell> grid_table_cells(const TableSpec& spec);

/// Serializes the table in the requested format. Deterministic: equal specs
/// produce byte-identical output. Throws std::invalid_argument on a
/// non-positive range.
std::string render_table(const TableSpec& spec);

}  // namespace pathhom
