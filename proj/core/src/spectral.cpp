#include <gpramsey/error.hpp>
#include <gpramsey/spectral.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace gpramsey {

auto alpha_semi(int scope) -> double
{
    if (scope < 1)
        throw InvalidInput("alpha(m) requires m >= 1");
    return std::sqrt(1.0 / (1.0 - std::ldexp(1.0, -scope)));
}

auto semi_threshold_floor(int scope, int k) -> BigInt
{
    if (scope < 1 || k < 0)
        throw InvalidInput("semi_threshold_floor requires m >= 1, k >= 0");
    BigInt two_m = BigInt(1) << scope;
    return floor_sqrt(pow(Rational(two_m, two_m - 1), k));
}

TransferMatrix::TransferMatrix(int colors, int diameter) :
    colors_(colors), diameter_(diameter)
{
    if (colors < 2)
        throw InvalidInput("transfer matrix needs r >= 2");
    if (diameter < 0 || diameter > 63)
        throw InvalidInput("transfer matrix diameter must be in [0, 63]");
    const Rational a = alpha();
    std::vector<Rational> powers{Rational(1)};
    for (int e = 1; e <= diameter; ++e)
        powers.push_back(powers.back() * a);

    int dim = dimension();
    entries_.reserve(static_cast<std::size_t>(dim * dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            entries_.push_back(powers[static_cast<std::size_t>(pair_multiplicity(i, j, diameter))]);
}

auto TransferMatrix::to_double() const -> std::vector<std::vector<double>>
{
    int dim = dimension();
    std::vector<std::vector<double>> out(static_cast<std::size_t>(dim), std::vector<double>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = gpramsey::to_double(at(i, j));
    return out;
}

namespace {
    auto row_sums(const TransferMatrix & a) -> std::vector<Rational>
    {
        std::vector<Rational> sums;
        for (int i = 0; i < a.dimension(); ++i) {
            Rational s = 0;
            for (int j = 0; j < a.dimension(); ++j)
                s += a.at(i, j);
            sums.push_back(s);
        }
        return sums;
    }
}

auto TransferMatrix::min_row_sum() const -> Rational
{
    auto s = row_sums(*this);
    return *std::min_element(s.begin(), s.end());
}

auto TransferMatrix::max_row_sum() const -> Rational
{
    auto s = row_sums(*this);
    return *std::max_element(s.begin(), s.end());
}

auto TransferMatrix::apply(const std::vector<Rational> & v) const -> std::vector<Rational>
{
    if (static_cast<int>(v.size()) != dimension())
        throw InvalidInput("vector dimension mismatch");
    std::vector<Rational> out(v.size());
    for (int i = 0; i < dimension(); ++i)
        for (int j = 0; j < dimension(); ++j)
            out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
auto TransferMatrix::characteristic_polynomial() const -> std::vector<Rational>
{
    const int n = dimension();
    const auto sz = static_cast<std::size_t>(n);
    using Matrix = std::vector<std::vector<Rational>>;
    Matrix a(sz, std::vector<Rational>(sz));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);

    std::vector<Rational> coeffs(sz + 1);
    coeffs[sz] = 1;
    Matrix m(sz, std::vector<Rational>(sz));
    for (int k = 1; k <= n; ++k) {
        Matrix am(sz, std::vector<Rational>(sz));
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j)
                for (std::size_t l = 0; l < sz; ++l)
                    am[i][j] += a[i][l] * m[l][j];
        for (std::size_t i = 0; i < sz; ++i)
            am[i][i] += coeffs[sz - static_cast<std::size_t>(k) + 1];
        m = std::move(am);

        Rational trace = 0;
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t l = 0; l < sz; ++l)
                trace += a[i][l] * m[l][i];
        coeffs[sz - static_cast<std::size_t>(k)] = -trace / k;
    }
    return coeffs;
}

auto dominant_eigenvalue(const TransferMatrix & a, double tol) -> EigenResult
{
    if (! (tol > 0.0))
        throw InvalidInput("tolerance must be positive");
    if (a.dimension() > 64)
        throw InvalidInput("dominant_eigenvalue supports dimension <= 64");

    const auto m = a.to_double();
    const auto dim = m.size();
    std::vector<double> v(dim, 1.0), w(dim);

    auto multiply = [&] {
        for (std::size_t i = 0; i < dim; ++i)
            w[i] = std::inner_product(m[i].begin(), m[i].end(), v.begin(), 0.0);
    };

    double previous = std::numeric_limits<double>::quiet_NaN();
    double best_residual = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= max_power_iterations; ++it) {
        multiply();
        double lambda = std::inner_product(v.begin(), v.end(), w.begin(), 0.0)
            / std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
        double residual = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            residual = std::max(residual, std::abs(w[i] - lambda * v[i]));
        best_residual = std::min(best_residual, residual);

        // v is kept at unit infinity norm, so the tolerance is absolute here
        if (std::abs(lambda - previous) < 1e-12 && residual <= tol) {
            EigenResult result{lambda, residual, v, std::numeric_limits<double>::infinity(), 0.0, it};
            for (std::size_t i = 0; i < dim; ++i) {
                result.lower = std::min(result.lower, w[i] / v[i]);
                result.upper = std::max(result.upper, w[i] / v[i]);
            }
            return result;
        }
        previous = lambda;
        double norm = *std::max_element(w.begin(), w.end());
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = w[i] / norm;
    }
    throw ConvergenceError("power iteration did not converge in " + std::to_string(max_power_iterations)
            + " iterations", best_residual);
}

auto perron_root_by_bisection(const TransferMatrix & a, double tol) -> double
{
    const auto coeffs = a.characteristic_polynomial();
    std::vector<long double> c;
    for (const auto & q : coeffs)
        c.push_back(static_cast<long double>(to_double(q)));
    auto p = [&](long double x) {
        long double y = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            y = y * x + *it;
        return y;
    };

    const long double lo = static_cast<long double>(to_double(a.min_row_sum())) - 1e-6L;
    const long double top = static_cast<long double>(to_double(a.max_row_sum())) + 1e-6L;
    constexpr int steps = 1 << 14;
    const long double step = (top - lo) / steps;

    // p > 0 above the largest real root; walk down to the first sign change
    long double hi = top, x = top;
    for (int s = 1; s <= steps; ++s) {
        x = top - step * s;
        if (p(x) <= 0)
            break;
        hi = x;
    }
    long double left = x, right = hi;
    for (int it = 0; it < 200 && right - left > tol; ++it) {
        long double mid = (left + right) / 2;
        (p(mid) > 0 ? right : left) = mid;
    }
    return static_cast<double>((left + right) / 2);
}

auto BoundResult::threshold(int k) const -> BigInt
{
    if (family.is_semi() && colors == 2)
        return semi_threshold_floor(family.param(), k);
    return BigInt(std::floor(std::pow(base, k)));
}

auto semi_bound(int scope) -> BoundResult
{
    return BoundResult{Family::semi(scope), 2, alpha_semi(scope), std::nullopt, 0.0};
}

auto beta_quasi(int colors, int diameter, double tol) -> BoundResult
{
    if (colors < 2)
        throw InvalidInput("beta requires r >= 2");
    if (diameter < 1)
        throw InvalidInput("beta requires n >= 1");
    auto eig = dominant_eigenvalue(TransferMatrix(colors, diameter), tol);
    return BoundResult{Family::quasi(diameter), colors, std::sqrt(colors / eig.lambda), eig.lambda, eig.residual};
}

auto quartic_root_check() -> double
{
    const double root = std::sqrt(4.0 - 2.0 * std::sqrt(2.0));
    const double beta = beta_quasi(2, 1).base;
    if (std::abs(beta - root) > 1e-6)
        throw Error("beta_{2,1} = " + std::to_string(beta) + " disagrees with the quartic root");
    if (! (root > prior_quasi_constant))
        throw Error("quartic root does not exceed the prior constant 1.08226");
    return root;
}

auto weighted_conjugate_sum(int length, int colors, int diameter) -> WeightedSums
{
    if (length < 1)
        throw InvalidInput("weighted_conjugate_sum requires t >= 1");
    TransferMatrix a(colors, diameter);
    std::vector<Rational> s;
    Rational power = 1;
    for (int j = 0; j <= diameter; ++j) {
        s.push_back(power);
        power *= a.alpha();
    }
    for (int t = 1; t < length; ++t)
        s = a.apply(s);
    Rational total = std::accumulate(s.begin(), s.end(), Rational(0));
    return WeightedSums{std::move(s), std::move(total)};
}

namespace {
    auto counting_prefactor(int colors, int n_points, int k) -> Rational
    {
        if (k < 2)
            throw InvalidInput("counting bounds require k >= 2");
        if (n_points < 1)
            throw InvalidInput("counting bounds require N >= 1");
        if (colors < 2)
            throw InvalidInput("counting bounds require r >= 2");
        return Rational(BigInt(n_points) * n_points, k - 1) * pow(Rational(colors), n_points - k + 1);
    }
}

auto semi_counting_bound(int n_points, int k, int scope, int colors) -> SemiCountingBound
{
    if (scope < 1)
        throw InvalidInput("scope must be >= 1");
    const Rational prefactor = counting_prefactor(colors, n_points, k);
    const Rational alpha(colors - 1, colors);
    std::vector<Rational> alpha_pow{Rational(1)};
    for (int e = 1; e <= (scope - 1) * (k - 1); ++e)
        alpha_pow.push_back(alpha_pow.back() * alpha);

    SemiCountingBound out;
    Rational sum = 0;
    FrequencyVector v{std::vector<int>(static_cast<std::size_t>(scope), 0)};
    // all v with sum k - 1, last slot takes the remainder
    auto rec = [&](auto & self, int slot, int remaining) -> void {
        if (slot == scope - 1) {
            v.counts[static_cast<std::size_t>(slot)] = remaining;
            int w = 0;
            for (int j = 0; j < scope; ++j)
                w += j * v.counts[static_cast<std::size_t>(j)];
            sum += Rational(multinomial_count(v)) * alpha_pow[static_cast<std::size_t>(w)];
            ++out.frequency_vectors;
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            v.counts[static_cast<std::size_t>(slot)] = c;
            self(self, slot + 1, remaining - c);
        }
    };
    rec(rec, 0, k - 1);
    out.sum_form = prefactor * sum;

    Rational geometric = 0;
    for (int j = 0; j < scope; ++j)
        geometric += alpha_pow[static_cast<std::size_t>(j)];
    out.closed_form = prefactor * pow(geometric, k - 1);

    if (colors == 2) {
        Rational base = Rational(BigInt(n_points) * n_points, k - 1) * pow(Rational(2), n_points);
        out.displayed_form = base * pow(Rational(1) - pow(Rational(1, 2), scope), k);
    }
    return out;
}

auto quasi_counting_bound(int colors, int n_points, int k, int diameter) -> Rational
{
    return counting_prefactor(colors, n_points, k) * weighted_conjugate_sum(k - 1, colors, diameter).total;
}

auto quasi_counting_bound_closed_form(int n_points, int k) -> double
{
    const double s = 1.0 / std::sqrt(2.0);
    return static_cast<double>(n_points) * n_points * std::ldexp(1.0, n_points - k + 1)
        * (std::pow(1 + s, k) + std::pow(1 - s, k)) / (2.0 * (k - 1));
}

auto comparison_bounds(int colors, int diameter, int k, int scope) -> ComparisonBounds
{
    if (colors < 2 || diameter < 1 || k < 1 || scope < 1)
        throw InvalidInput("comparison bounds need r >= 2 and positive n, k, m");
    ComparisonBounds out{};
    out.naive_quasi_base = std::sqrt(static_cast<double>(colors) / (diameter + 1));
    out.naive_quasi = std::pow(out.naive_quasi_base, k);
    out.landman_semi = 2.0 * k * k / scope;
    out.alpha = alpha_semi(scope);
    out.alpha_power = std::pow(out.alpha, k);
    out.beta = beta_quasi(colors, diameter).base;
    out.beta_power = std::pow(out.beta, k);
    return out;
}

} // namespace gpramsey
