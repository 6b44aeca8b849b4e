#pragma once

#include <gpramsey/exact.hpp>
#include <gpramsey/family.hpp>
#include <gpramsey/progression.hpp>

#include <optional>
#include <vector>

namespace gpramsey {

/// alpha(m) = sqrt(2^m / (2^m - 1)).
auto alpha_semi(int scope) -> double;

/// floor(alpha(m)^k), computed exactly as floor(sqrt((2^m / (2^m - 1))^k)).
auto semi_threshold_floor(int scope, int k) -> BigInt;

/// The (n+1)x(n+1) matrix A_{r,n} with entry (i, j) = alpha^{min(i, n - j)}, alpha = 1 - 1/r.
class TransferMatrix {
public:
    TransferMatrix(int colors, int diameter);

    auto colors() const noexcept -> int { return colors_; }
    auto diameter() const noexcept -> int { return diameter_; }
    auto dimension() const noexcept -> int { return diameter_ + 1; }
    auto alpha() const -> Rational { return Rational(colors_ - 1, colors_); }

    auto at(int i, int j) const -> const Rational & { return entries_[index(i, j)]; }

    auto to_double() const -> std::vector<std::vector<double>>;

    auto min_row_sum() const -> Rational;
    auto max_row_sum() const -> Rational;

    /// Exact product A * v.
    auto apply(const std::vector<Rational> & v) const -> std::vector<Rational>;

    /// Coefficients c_0..c_{dim} of det(lambda I - A), lowest degree first (c_dim = 1).
    auto characteristic_polynomial() const -> std::vector<Rational>;

private:
    auto index(int i, int j) const -> std::size_t
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dimension()) + static_cast<std::size_t>(j);
    }

    int colors_;
    int diameter_;
    std::vector<Rational> entries_;
};

inline auto transfer_matrix(int colors, int diameter) -> TransferMatrix
{
    return TransferMatrix(colors, diameter);
}

struct EigenResult {
    double lambda;
    /// ||A v - lambda v||_inf for the returned iterate.
    double residual;
    /// Perron vector scaled to ||v||_inf = 1.
    std::vector<double> vector;
    /// Collatz-Wielandt bracket min_i (Av)_i / v_i <= lambda_max <= max_i (Av)_i / v_i.
    double lower;
    double upper;
    int iterations;
};

inline constexpr double default_eigen_tolerance = 1e-13;
inline constexpr int max_power_iterations = 100000;

/// Perron root by power iteration from the all-ones vector. Converged when successive
/// Rayleigh quotients differ by less than 1e-12 and the residual is at most tol * ||v||_inf.
/// Throws ConvergenceError after max_power_iterations.
auto dominant_eigenvalue(const TransferMatrix & a, double tol = default_eigen_tolerance) -> EigenResult;

/// Largest real root of the characteristic polynomial, by sign scan from the max row sum
/// downwards and bisection. Independent of power iteration; meant for dimensions <= 4.
auto perron_root_by_bisection(const TransferMatrix & a, double tol = 1e-14) -> double;

struct BoundResult {
    Family family;
    int colors;
    double base;
    std::optional<double> lambda_max;
    double residual = 0.0;

    auto useful() const noexcept -> bool { return base > 1.0; }

    /// floor(base^k).
    auto threshold(int k) const -> BigInt;
};

/// Semi bound for 2 colors: base alpha(m).
auto semi_bound(int scope) -> BoundResult;

/// beta_{r,n} = sqrt(r / lambda_max(A_{r,n})). Requires r >= 2, n >= 1.
auto beta_quasi(int colors, int diameter, double tol = default_eigen_tolerance) -> BoundResult;

/// sqrt(4 - 2 sqrt 2), the smallest positive root of y^4 - 8y^2 + 8. Throws Error if it
/// disagrees with beta_quasi(2, 1) beyond 1e-6 or fails to exceed 1.08226.
auto quartic_root_check() -> double;

inline constexpr double prior_quasi_constant = 1.08226;

struct WeightedSums {
    /// S_{t,j}: sum of alpha^{weight} over quasi conjugate vectors of length t starting with j.
    std::vector<Rational> by_first_entry;
    /// S_t = sum_j S_{t,j}.
    Rational total;
};

auto weighted_conjugate_sum(int length, int colors, int diameter) -> WeightedSums;

struct SemiCountingBound {
    /// (N^2 r^{N-k+1} / (k-1)) * sum over frequency vectors of M(v) alpha^{<mu, v>}.
    Rational sum_form;
    /// (N^2 r^{N-k+1} / (k-1)) * (sum_{j<m} alpha^j)^{k-1}; for r = 2 this is
    /// (N^2 2^N / (k-1)) (1 - 2^{-m})^{k-1}.
    Rational closed_form;
    /// The exponent-k variant (N^2 2^N / (k-1)) (1 - 2^{-m})^k; only for r = 2.
    std::optional<Rational> displayed_form;
    std::size_t frequency_vectors = 0;
};

/// Counting upper bound on the number of r-colorings of [1, N] containing a monochromatic
/// k-term semi-progression of scope m.
auto semi_counting_bound(int n_points, int k, int scope, int colors = 2) -> SemiCountingBound;

/// (N^2 r^{N-k+1} / (k-1)) * S_{k-1}(r, n).
auto quasi_counting_bound(int colors, int n_points, int k, int diameter) -> Rational;

/// The r = 2, n = 1 closed form N^2 2^{N-k+1} [(1 + 1/sqrt2)^k + (1 - 1/sqrt2)^k] / (2(k-1)).
auto quasi_counting_bound_closed_form(int n_points, int k) -> double;

struct ComparisonBounds {
    double naive_quasi_base;
    double naive_quasi;
    double landman_semi;
    double alpha;
    double alpha_power;
    double beta;
    double beta_power;
};

auto comparison_bounds(int colors, int diameter, int k, int scope) -> ComparisonBounds;

} // namespace gpramsey
