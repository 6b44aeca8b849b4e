#pragma once

#include <gpramsey/coloring.hpp>
#include <gpramsey/exact.hpp>
#include <gpramsey/family.hpp>
#include <gpramsey/progression.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <vector>

namespace gpramsey {

struct OracleBudget {
    int max_points = 24;
    std::uint64_t max_colorings = std::uint64_t{1} << 24;
};

struct CountReport {
    int colors = 2;
    int n_points = 0;
    int k = 0;
    Family family = Family::semi(1);
    /// Colorings of [1, N] containing a monochromatic k-term progression (f or g).
    BigInt mono_count;
    /// r^N.
    BigInt total;
    /// Counting bound with the N^2 / (k-1) pair factor.
    Rational bound_value;
    bool bound_satisfied = false;
    /// Same bound with the exact number of admissible (a, d) pairs in place of N^2 / (k-1).
    Rational refined_bound;
    bool refined_satisfied = false;
};

/// mono_count / total.
auto mono_proportion(const CountReport & report) -> Rational;

/// Number of pairs (a, d) with a + (k-1) d <= N.
auto admissible_pair_count(int n_points, int k) -> std::int64_t;

/// Distinct term sets of all k-term progressions inside [1, N], as bitmasks (bit x-1 for point x).
auto progression_masks(int n_points, int k, const Family & family) -> std::vector<std::uint64_t>;

/// Exact count by sweeping all r^N colorings. Throws BudgetExceeded if N > max_points or
/// r^N > max_colorings. The sweep is split into `workers` disjoint counter ranges.
auto count_mono_colorings(int colors, int n_points, int k, const Family & family,
    const OracleBudget & budget = {}, int workers = 1) -> CountReport;

/// count_mono_colorings plus the comparison against the counting bound (and refined bound).
auto verify_counting_inequality(int colors, int n_points, int k, const Family & family,
    const OracleBudget & budget = {}, int workers = 1) -> CountReport;

struct PrimaryCount {
    Progression progression;
    std::uint64_t colorings;
};

struct PartitionReport {
    bool holds = true;
    /// Colorings with at least one monochromatic (a, d) progression.
    std::uint64_t with_monochromatic = 0;
    /// Sum over progressions P of #{chi : P is (a, d)-primary}.
    std::uint64_t primary_sum = 0;
    std::vector<PrimaryCount> by_progression;
};

/// Checks that colorings with a monochromatic (a, d) progression are partitioned by their
/// primary progression, comparing primary_progression against exhaustive candidate listing.
auto primary_partition_check(int colors, int n_points, int k, const Family & family, int first,
    int low_difference, const OracleBudget & budget = {}) -> PartitionReport;

struct ForcedCountEntry {
    Progression progression;
    int weight;
    std::uint64_t colorings;
    BigInt bound;
};

struct ForcedCountReport {
    bool holds = true;
    std::vector<ForcedCountEntry> entries;
};

/// r (r-1)^w r^{N-k-w}: colorings that can have a given weight-w progression as primary.
auto primary_coloring_bound(int colors, int n_points, int k, int weight) -> BigInt;

/// For every progression P with first term a and low-difference d, checks
/// #{chi : P primary} <= primary_coloring_bound(r, N, k, w(P)).
auto forced_count_check(int colors, int n_points, int k, const Family & family, int first,
    int low_difference, const OracleBudget & budget = {}) -> ForcedCountReport;

auto to_json(const CountReport & report) -> nlohmann::ordered_json;

} // namespace gpramsey
