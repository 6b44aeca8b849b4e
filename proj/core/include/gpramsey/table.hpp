#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace gpramsey {

struct TableCell {
    int colors;
    int diameter;
    double alpha;
    double lambda_max;
    double residual;
    double beta;
    bool useful;
};

/// beta_{r,n} for 2 <= r <= r_max, 1 <= n <= n_max, row-major in (r, n). Cells may be
/// evaluated on `workers` threads; the result does not depend on the worker count.
auto beta_table(int r_max, int n_max, int workers = 1) -> std::vector<TableCell>;

/// Display form: beta truncated to 5 decimals, or "<1" when beta <= 1.
auto format_beta(double beta) -> std::string;

/// Grid CSV: header "r/n,1,...,n_max", one row per r.
auto write_table_csv(std::ostream & out, const std::vector<TableCell> & cells) -> void;

/// Aligned text grid in the same layout as the CSV.
auto write_table_text(std::ostream & out, const std::vector<TableCell> & cells) -> void;

/// Records {r, n, alpha, lambda_max, residual, beta, useful} at full precision.
auto table_to_json(const std::vector<TableCell> & cells) -> nlohmann::ordered_json;

} // namespace gpramsey
