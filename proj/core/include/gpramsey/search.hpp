#pragma once

#include <gpramsey/coloring.hpp>
#include <gpramsey/family.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>

namespace gpramsey {

struct SearchBudget {
    /// Exact search: nodes of the backtracking tree. Witness search: total repair moves.
    std::uint64_t max_nodes = 2'000'000'000;
    /// Longest coloring the exact search may build before giving up.
    int max_length = 512;
    std::uint64_t seed = 0;
    /// Witness search: number of independent seeded streams sharing max_nodes.
    int restarts = 1;
};

struct ThresholdCertificate {
    Family family;
    int colors;
    int k;
    /// Least N such that every r-coloring of [1, N] has a monochromatic k-term progression.
    int value;
    /// Lexicographically least coloring of [1, value - 1] among canonical valid colorings.
    Coloring witness;
    std::uint64_t nodes_explored;
    bool exhaustive;
};

/// Exact Ramsey value by depth-first extension of partial colorings. Point 1 gets color 0
/// and colors first appear in ascending order. Throws BudgetExceeded carrying the longest
/// valid coloring found when max_nodes or max_length is hit. The top of the tree may be
/// split across `workers` threads; the certificate does not depend on the worker count.
auto exact_threshold(int colors, int k, const Family & family, const SearchBudget & budget = {},
    int workers = 1) -> ThresholdCertificate;

struct WitnessSearchResult {
    std::optional<Coloring> witness;
    /// Index of the stream that produced the witness.
    int stream = -1;
    std::uint64_t moves = 0;
};

/// Random colorings of [1, N] with greedy local repair. Streams are seeded from
/// budget.seed and the lowest-index successful stream wins.
auto random_witness_search(int colors, int n_points, int k, const Family & family,
    const SearchBudget & budget = {}, int workers = 1) -> WitnessSearchResult;

/// True iff chi contains no monochromatic k-term progression of the family.
auto check_witness(const Coloring & chi, int k, const Family & family) -> bool;

/// Number of monochromatic k-term progressions (term sequence plus low-difference) in chi.
auto count_monochromatic(const Coloring & chi, int k, const Family & family) -> double;

/// Number of those progressions that contain the point x.
auto count_monochromatic_through(const Coloring & chi, int k, const Family & family, int x) -> double;

auto to_json(const ThresholdCertificate & cert) -> nlohmann::ordered_json;

} // namespace gpramsey
