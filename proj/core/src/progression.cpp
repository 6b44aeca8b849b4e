#include <gpramsey/error.hpp>
#include <gpramsey/progression.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace gpramsey {

ConjugateVector::ConjugateVector(std::vector<int> entries, Family family) :
    entries_(std::move(entries)), family_(family)
{
    for (int u : entries_)
        if (u < 0 || u > family_.max_entry())
            throw InvalidInput("conjugate entry " + std::to_string(u) + " out of range for " + family_.describe());
}

auto FrequencyVector::total() const -> int
{
    return std::accumulate(counts.begin(), counts.end(), 0);
}

auto validate_progression(std::span<const int> terms, int low_difference, const Family & family) -> bool
{
    if (terms.size() < 2)
        throw InvalidInput("a progression needs at least two terms");
    if (low_difference < 1)
        throw InvalidInput("low-difference must be positive");
    if (terms.front() < 1)
        throw InvalidInput("terms must be positive integers");
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        if (terms[i + 1] <= terms[i])
            throw InvalidInput("terms must be strictly increasing");

    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        if (family.entry_for_gap(low_difference, terms[i + 1] - terms[i]) < 0)
            return false;
    return true;
}

Progression::Progression(std::vector<int> terms, int low_difference, Family family) :
    terms_(std::move(terms)), low_difference_(low_difference), family_(family)
{
    if (! validate_progression(terms_, low_difference_, family_))
        throw InvalidInput("gaps are not allowed for " + family_.describe() + " with low-difference "
            + std::to_string(low_difference_));
}

auto Progression::from_conjugate(int first, int low_difference, std::span<const int> entries,
    const Family & family) -> Progression
{
    std::vector<int> terms{first};
    for (int u : entries) {
        if (u < 0 || u > family.max_entry())
            throw InvalidInput("conjugate entry out of range");
        terms.push_back(terms.back() + family.gap(low_difference, u));
    }
    return Progression(std::move(terms), low_difference, family);
}

auto conjugate_vector(const Progression & p) -> ConjugateVector
{
    auto terms = p.terms();
    std::vector<int> entries;
    entries.reserve(terms.size() - 1);
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        entries.push_back(p.family().entry_for_gap(p.low_difference(), terms[i + 1] - terms[i]));
    return ConjugateVector(std::move(entries), p.family());
}

auto frequency_vector(const ConjugateVector & u, int scope) -> FrequencyVector
{
    if (! u.family().is_semi())
        throw InvalidInput("frequency vectors are defined for semi-progressions only");
    if (scope < 1)
        throw InvalidInput("scope must be >= 1");
    FrequencyVector v{std::vector<int>(static_cast<std::size_t>(scope), 0)};
    for (int x : u.entries()) {
        if (x >= scope)
            throw InvalidInput("conjugate entry " + std::to_string(x) + " >= scope " + std::to_string(scope));
        ++v.counts[static_cast<std::size_t>(x)];
    }
    return v;
}

auto pair_multiplicity(int x, int y, int diameter) -> int
{
    if (diameter < 0 || x < 0 || y < 0 || x > diameter || y > diameter)
        throw InvalidInput("pair (" + std::to_string(x) + ", " + std::to_string(y) + ") out of range for diameter "
            + std::to_string(diameter));
    return std::min(x, diameter - y);
}

auto weight(const ConjugateVector & u) -> int
{
    auto e = u.entries();
    if (e.empty())
        return 0;
    if (u.family().is_semi())
        return std::accumulate(e.begin(), e.end(), 0);

    int n = u.family().param();
    int w = e.back();
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        w += pair_multiplicity(e[i], e[i + 1], n);
    return w;
}

namespace {
    // Smallest j such that replacing a_{i+1} by a_i + d + j keeps the next gap allowed.
    auto quasi_replacement_floor(int x, int y, int diameter) -> int
    {
        return std::max(0, x - (diameter - y));
    }
}

auto forced_elements(const Progression & p) -> std::vector<int>
{
    auto terms = p.terms();
    auto u = conjugate_vector(p);
    int d = p.low_difference();
    std::size_t gaps = u.size();
    std::vector<int> forced;

    if (p.family().is_semi()) {
        for (std::size_t i = 0; i < gaps; ++i)
            for (int j = 0; j < u[i]; ++j)
                forced.push_back(terms[i] + (j + 1) * d);
    }
    else {
        int n = p.family().param();
        for (std::size_t i = 0; i + 1 < gaps; ++i)
            for (int j = quasi_replacement_floor(u[i], u[i + 1], n); j < u[i]; ++j)
                forced.push_back(terms[i] + d + j);
        for (int j = 0; j < u[gaps - 1]; ++j)
            forced.push_back(terms[gaps - 1] + d + j);
    }
    return forced;
}

auto exchange_progression(const Progression & p, int forced) -> Progression
{
    auto all = forced_elements(p);
    if (! std::binary_search(all.begin(), all.end(), forced))
        throw InvalidInput(std::to_string(forced) + " is not a forced element of the progression");

    auto terms = p.terms();
    auto next = std::upper_bound(terms.begin(), terms.end(), forced);
    auto pos = static_cast<std::size_t>(next - terms.begin());

    std::vector<int> out(terms.begin(), terms.end());
    if (p.family().is_semi()) {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), forced);
        out.pop_back();
    }
    else
        out[pos] = forced;
    return Progression(std::move(out), p.low_difference(), p.family());
}

auto primary_progression(const Coloring & chi, int first, int low_difference, int k,
    const Family & family) -> std::optional<Progression>
{
    int n_points = chi.n_points();
    if (k < 2)
        throw InvalidInput("k must be >= 2");
    if (first < 1 || first > n_points)
        throw InvalidInput("first term " + std::to_string(first) + " outside [1, " + std::to_string(n_points) + "]");
    if (low_difference < 1)
        throw InvalidInput("low-difference must be positive");

    const Color c = chi.at(first);
    const auto stride = static_cast<std::size_t>(k + 1);
    // dead[x * stride + t]: no completion exists from term t placed at point x
    std::vector<char> dead(static_cast<std::size_t>(n_points + 1) * stride, 0);
    std::vector<int> terms{first};
    terms.reserve(static_cast<std::size_t>(k));

    auto extend = [&](auto & self, int x, int placed) -> bool {
        if (placed == k)
            return true;
        for (int u = 0; u <= family.max_entry(); ++u) {
            int y = x + family.gap(low_difference, u);
            if (y > n_points)
                break;
            auto slot = static_cast<std::size_t>(y) * stride + static_cast<std::size_t>(placed + 1);
            if (chi.at(y) != c || dead[slot])
                continue;
            terms.push_back(y);
            if (self(self, y, placed + 1))
                return true;
            terms.pop_back();
            dead[slot] = 1;
        }
        return false;
    };

    if (! extend(extend, first, 1))
        return std::nullopt;
    return Progression(std::move(terms), low_difference, family);
}

auto find_monochromatic(const Coloring & chi, int k, const Family & family) -> std::optional<Progression>
{
    if (k < 2)
        throw InvalidInput("k must be >= 2");
    int n_points = chi.n_points();
    for (int a = 1; a <= n_points; ++a)
        for (int d = 1; d <= max_low_difference(a, k, n_points); ++d)
            if (auto p = primary_progression(chi, a, d, k, family))
                return p;
    return std::nullopt;
}

auto for_each_progression(int first, int low_difference, int k, const Family & family, int n_points,
    const std::function<void(const Progression &)> & visit) -> void
{
    if (k < 2 || first < 1 || low_difference < 1 || first > n_points)
        return;
    std::vector<int> terms{first};
    auto rec = [&](auto & self, int x) -> void {
        if (static_cast<int>(terms.size()) == k) {
            visit(Progression(terms, low_difference, family));
            return;
        }
        for (int u = 0; u <= family.max_entry(); ++u) {
            int y = x + family.gap(low_difference, u);
            if (y > n_points)
                break;
            terms.push_back(y);
            self(self, y);
            terms.pop_back();
        }
    };
    rec(rec, first);
}

} // namespace gpramsey
