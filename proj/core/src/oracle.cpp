#include <gpramsey/error.hpp>
#include <gpramsey/oracle.hpp>
#include <gpramsey/spectral.hpp>

#include <algorithm>
#include <array>
#include <future>
#include <limits>

namespace gpramsey {

namespace {
    auto checked_total(int colors, int n_points, const OracleBudget & budget) -> std::uint64_t
    {
        if (colors < 2)
            throw InvalidInput("oracle needs r >= 2");
        if (n_points < 0)
            throw InvalidInput("oracle needs N >= 0");
        if (n_points > budget.max_points || n_points > 63)
            throw BudgetExceeded("N = " + std::to_string(n_points) + " exceeds the oracle limit of "
                + std::to_string(std::min(budget.max_points, 63)) + " points");
        std::uint64_t total = 1;
        for (int i = 0; i < n_points; ++i) {
            if (total > budget.max_colorings / static_cast<std::uint64_t>(colors))
                throw BudgetExceeded("r^N = " + std::to_string(colors) + "^" + std::to_string(n_points)
                    + " exceeds max_colorings = " + std::to_string(budget.max_colorings));
            total *= static_cast<std::uint64_t>(colors);
        }
        return total;
    }

    auto count_range(int colors, int n_points, const std::vector<std::uint64_t> & masks, std::uint64_t begin,
        std::uint64_t end) -> std::uint64_t
    {
        if (begin >= end)
            return 0;
        const std::uint64_t full = n_points == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_points) - 1;
        std::uint64_t count = 0;

        if (colors == 2) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                const std::uint64_t ones = idx, zeros = ~idx & full;
                for (auto m : masks)
                    if ((ones & m) == m || (zeros & m) == m) {
                        ++count;
                        break;
                    }
            }
            return count;
        }

        // base-r counter with per-color class masks, point 1 least significant
        std::vector<int> digits(static_cast<std::size_t>(n_points));
        std::array<std::uint64_t, max_colors> classes{};
        std::uint64_t rest = begin;
        for (int i = 0; i < n_points; ++i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(colors));
            rest /= static_cast<std::uint64_t>(colors);
            classes[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])] |= std::uint64_t{1} << i;
        }
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            for (auto m : masks) {
                bool mono = false;
                for (int c = 0; c < colors && ! mono; ++c)
                    mono = (classes[static_cast<std::size_t>(c)] & m) == m;
                if (mono) {
                    ++count;
                    break;
                }
            }
            for (int i = 0; i < n_points; ++i) {
                auto & dg = digits[static_cast<std::size_t>(i)];
                const auto bit = std::uint64_t{1} << i;
                classes[static_cast<std::size_t>(dg)] &= ~bit;
                dg = dg + 1 == colors ? 0 : dg + 1;
                classes[static_cast<std::size_t>(dg)] |= bit;
                if (dg != 0)
                    break;
            }
        }
        return count;
    }

    auto fill_bounds(CountReport & report) -> void
    {
        const auto & fam = report.family;
        const int r = report.colors, n = report.n_points, k = report.k;
        if (n < 1) {
            report.bound_value = 0;
            report.refined_bound = 0;
        }
        else {
            report.bound_value = fam.is_semi() ? semi_counting_bound(n, k, fam.param(), r).closed_form
                                               : quasi_counting_bound(r, n, k, fam.param());
            // replace the N^2 / (k-1) pair factor by the exact pair count
            report.refined_bound
                = report.bound_value * Rational(admissible_pair_count(n, k) * (k - 1), BigInt(n) * n);
        }
        report.bound_satisfied = Rational(report.mono_count) <= report.bound_value;
        report.refined_satisfied = Rational(report.mono_count) <= report.refined_bound;
    }

    auto enumerate_candidates(int n_points, int k, const Family & family, int first, int low_difference)
        -> std::vector<Progression>
    {
        std::vector<Progression> out;
        for_each_progression(first, low_difference, k, family, n_points,
            [&](const Progression & p) { out.push_back(p); });
        return out;
    }

    auto is_monochromatic(const Coloring & chi, const Progression & p) -> bool
    {
        auto t = p.terms();
        return std::all_of(t.begin(), t.end(), [&](int x) { return chi.at(x) == chi.at(t.front()); });
    }
}

auto mono_proportion(const CountReport & report) -> Rational
{
    return Rational(report.mono_count, report.total);
}

auto admissible_pair_count(int n_points, int k) -> std::int64_t
{
    if (k < 2)
        throw InvalidInput("k must be >= 2");
    std::int64_t pairs = 0;
    for (int a = 1; a <= n_points; ++a)
        pairs += max_low_difference(a, k, n_points);
    return pairs;
}

auto progression_masks(int n_points, int k, const Family & family) -> std::vector<std::uint64_t>
{
    if (k < 2)
        throw InvalidInput("k must be >= 2");
    if (n_points > 64)
        throw InvalidInput("progression masks support N <= 64");
    std::vector<std::uint64_t> masks;
    auto rec = [&](auto & self, int x, int placed, int d, std::uint64_t mask) -> void {
        if (placed == k) {
            masks.push_back(mask);
            return;
        }
        for (int u = 0; u <= family.max_entry(); ++u) {
            int y = x + family.gap(d, u);
            if (y > n_points)
                break;
            self(self, y, placed + 1, d, mask | (std::uint64_t{1} << (y - 1)));
        }
    };
    for (int a = 1; a <= n_points; ++a)
        for (int d = 1; d <= max_low_difference(a, k, n_points); ++d)
            rec(rec, a, 1, d, std::uint64_t{1} << (a - 1));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

auto count_mono_colorings(int colors, int n_points, int k, const Family & family, const OracleBudget & budget,
    int workers) -> CountReport
{
    if (k < 2)
        throw InvalidInput("k must be >= 2");
    const std::uint64_t total = checked_total(colors, n_points, budget);
    const auto masks = progression_masks(n_points, k, family);

    std::uint64_t mono = 0;
    if (! masks.empty()) {
        const auto parts = static_cast<std::uint64_t>(std::max(1, workers));
        std::vector<std::future<std::uint64_t>> jobs;
        for (std::uint64_t w = 0; w < parts; ++w) {
            std::uint64_t begin = total / parts * w + std::min(w, total % parts);
            std::uint64_t end = begin + total / parts + (w < total % parts ? 1 : 0);
            jobs.push_back(std::async(parts == 1 ? std::launch::deferred : std::launch::async,
                [=, &masks] { return count_range(colors, n_points, masks, begin, end); }));
        }
        for (auto & j : jobs)
            mono += j.get();
    }

    CountReport report;
    report.colors = colors;
    report.n_points = n_points;
    report.k = k;
    report.family = family;
    report.mono_count = mono;
    report.total = total;
    fill_bounds(report);
    return report;
}

auto verify_counting_inequality(int colors, int n_points, int k, const Family & family,
    const OracleBudget & budget, int workers) -> CountReport
{
    auto report = count_mono_colorings(colors, n_points, k, family, budget, workers);
    // the refined bound is never larger than the N^2/(k-1) form
    if (report.refined_bound > report.bound_value)
        throw Error("refined counting bound exceeds the pair-factor bound");
    return report;
}

auto primary_partition_check(int colors, int n_points, int k, const Family & family, int first,
    int low_difference, const OracleBudget & budget) -> PartitionReport
{
    if (k < 2 || low_difference < 1)
        throw InvalidInput("partition check needs k >= 2 and d >= 1");
    const std::uint64_t total = checked_total(colors, n_points, budget);
    const auto candidates = enumerate_candidates(n_points, k, family, first, low_difference);

    PartitionReport report;
    if (candidates.empty())
        return report;

    std::vector<std::uint64_t> counts(candidates.size(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto chi = Coloring::from_index(colors, n_points, idx);
        auto primary = primary_progression(chi, first, low_difference, k, family);
        // candidates are in ascending conjugate order, so the first monochromatic one is lex-least
        auto brute = std::find_if(candidates.begin(), candidates.end(),
            [&](const Progression & p) { return is_monochromatic(chi, p); });

        if (brute == candidates.end()) {
            if (primary)
                report.holds = false;
            continue;
        }
        ++report.with_monochromatic;
        if (! primary || *primary != *brute || ! is_monochromatic(chi, *primary)) {
            report.holds = false;
            continue;
        }
        ++counts[static_cast<std::size_t>(brute - candidates.begin())];
    }

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        report.primary_sum += counts[i];
        report.by_progression.push_back(PrimaryCount{candidates[i], counts[i]});
    }
    report.holds = report.holds && report.primary_sum == report.with_monochromatic;
    return report;
}

auto primary_coloring_bound(int colors, int n_points, int k, int weight) -> BigInt
{
    const int free_cells = n_points - k - weight;
    if (free_cells < 0)
        throw InvalidInput("progression with k + w(P) > N cannot lie in [1, N]");
    return BigInt(colors) * pow(BigInt(colors - 1), weight) * pow(BigInt(colors), free_cells);
}

auto forced_count_check(int colors, int n_points, int k, const Family & family, int first,
    int low_difference, const OracleBudget & budget) -> ForcedCountReport
{
    if (k < 2 || low_difference < 1)
        throw InvalidInput("forced count check needs k >= 2 and d >= 1");
    const std::uint64_t total = checked_total(colors, n_points, budget);
    const auto candidates = enumerate_candidates(n_points, k, family, first, low_difference);

    ForcedCountReport report;
    if (candidates.empty())
        return report;

    std::vector<std::uint64_t> counts(candidates.size(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto chi = Coloring::from_index(colors, n_points, idx);
        if (auto primary = primary_progression(chi, first, low_difference, k, family)) {
            auto it = std::find(candidates.begin(), candidates.end(), *primary);
            ++counts[static_cast<std::size_t>(it - candidates.begin())];
        }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        int w = weight(conjugate_vector(candidates[i]));
        auto bound = primary_coloring_bound(colors, n_points, k, w);
        report.holds = report.holds && BigInt(counts[i]) <= bound;
        report.entries.push_back(ForcedCountEntry{candidates[i], w, counts[i], std::move(bound)});
    }
    return report;
}

auto to_json(const CountReport & report) -> nlohmann::ordered_json
{
    return nlohmann::ordered_json{
        {"family", report.family.name()},
        {"param", report.family.param()},
        {"r", report.colors},
        {"k", report.k},
        {"n_points", report.n_points},
        {"mono_count", to_string(report.mono_count)},
        {"total", to_string(report.total)},
        {"proportion", to_double(mono_proportion(report))},
        {"bound_value", to_string(report.bound_value)},
        {"bound_value_approx", to_double(report.bound_value)},
        {"bound_satisfied", report.bound_satisfied},
        {"refined_bound", to_string(report.refined_bound)},
        {"refined_satisfied", report.refined_satisfied},
    };
}

} // namespace gpramsey
