#include <gpramsey/error.hpp>
#include <gpramsey/spectral.hpp>
#include <gpramsey/table.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <iomanip>
#include <map>
#include <set>

namespace gpramsey {

namespace {
    auto evaluate_cell(int r, int n) -> TableCell
    {
        auto bound = beta_quasi(r, n);
        return TableCell{r, n, 1.0 - 1.0 / r, *bound.lambda_max, bound.residual, bound.base, bound.useful()};
    }

    struct Grid {
        std::vector<int> rows;
        std::vector<int> columns;
        std::map<std::pair<int, int>, const TableCell *> cells;
    };

    auto make_grid(const std::vector<TableCell> & cells) -> Grid
    {
        std::set<int> rows, columns;
        Grid g;
        for (const auto & c : cells) {
            rows.insert(c.colors);
            columns.insert(c.diameter);
            g.cells[{c.colors, c.diameter}] = &c;
        }
        g.rows.assign(rows.begin(), rows.end());
        g.columns.assign(columns.begin(), columns.end());
        return g;
    }

    auto cell_text(const Grid & g, int r, int n) -> std::string
    {
        auto it = g.cells.find({r, n});
        return it == g.cells.end() ? "" : format_beta(it->second->beta);
    }
}

auto beta_table(int r_max, int n_max, int workers) -> std::vector<TableCell>
{
    if (r_max < 2 || n_max < 1)
        throw InvalidInput("table needs r_max >= 2 and n_max >= 1");
    if (n_max > 63)
        throw InvalidInput("table supports n_max <= 63");

    std::vector<std::pair<int, int>> coords;
    for (int r = 2; r <= r_max; ++r)
        for (int n = 1; n <= n_max; ++n)
            coords.emplace_back(r, n);

    std::vector<TableCell> cells(coords.size());
    workers = std::clamp(workers, 1, static_cast<int>(coords.size()));
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < coords.size(); i += static_cast<std::size_t>(workers))
                cells[i] = evaluate_cell(coords[i].first, coords[i].second);
        }));
    for (auto & j : jobs)
        j.get();
    return cells;
}

auto format_beta(double beta) -> std::string
{
    if (! (beta > 1.0))
        return "<1";
    auto scaled = static_cast<long long>(std::floor(beta * 1e5));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld.%05lld", scaled / 100000, scaled % 100000);
    return buf;
}

auto write_table_csv(std::ostream & out, const std::vector<TableCell> & cells) -> void
{
    auto g = make_grid(cells);
    out << "r/n";
    for (int n : g.columns)
        out << ',' << n;
    out << '\n';
    for (int r : g.rows) {
        out << r;
        for (int n : g.columns)
            out << ',' << cell_text(g, r, n);
        out << '\n';
    }
}

auto write_table_text(std::ostream & out, const std::vector<TableCell> & cells) -> void
{
    auto g = make_grid(cells);
    out << std::left << std::setw(8) << "n";
    for (int n : g.columns)
        out << std::setw(10) << n;
    out << '\n';
    for (int r : g.rows) {
        out << std::setw(8) << ("beta_" + std::to_string(r) + ",n");
        for (int n : g.columns)
            out << std::setw(10) << cell_text(g, r, n);
        out << '\n';
    }
}

auto table_to_json(const std::vector<TableCell> & cells) -> nlohmann::ordered_json
{
    auto out = nlohmann::ordered_json::array();
    for (const auto & c : cells)
        out.push_back(nlohmann::ordered_json{{"r", c.colors}, {"n", c.diameter}, {"alpha", c.alpha}, {"lambda_max", c.lambda_max},
            {"residual", c.residual}, {"beta", c.beta}, {"useful", c.useful}});
    return out;
}

} // namespace gpramsey
