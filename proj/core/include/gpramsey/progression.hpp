#pragma once

#include <gpramsey/coloring.hpp>
#include <gpramsey/family.hpp>

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gpramsey {

/// Per-gap excess over the minimal gap: (a_{i+1} - a_i - d) / d for Semi,
/// a_{i+1} - a_i - d for Quasi. Ordered lexicographically by entries.
class ConjugateVector {
public:
    ConjugateVector(std::vector<int> entries, Family family);

    auto entries() const noexcept -> std::span<const int> { return entries_; }
    auto family() const noexcept -> const Family & { return family_; }
    auto size() const noexcept -> std::size_t { return entries_.size(); }
    auto operator[](std::size_t i) const -> int { return entries_[i]; }

    friend auto operator==(const ConjugateVector & a, const ConjugateVector & b) -> bool
    {
        return a.entries_ == b.entries_;
    }
    friend auto operator<=>(const ConjugateVector & a, const ConjugateVector & b) -> std::strong_ordering
    {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    Family family_;
};

/// Histogram (v_0, ..., v_{m-1}) of a Semi conjugate vector.
struct FrequencyVector {
    std::vector<int> counts;

    auto total() const -> int;

    friend auto operator==(const FrequencyVector &, const FrequencyVector &) -> bool = default;
};

/// A validated k-term progression (k >= 2) with first term a and low-difference d.
class Progression {
public:
    /// Throws InvalidInput unless validate_progression() accepts the arguments.
    Progression(std::vector<int> terms, int low_difference, Family family);

    /// Builds the progression a, a + gap(u_1), ... from a conjugate vector.
    static auto from_conjugate(int first, int low_difference, std::span<const int> entries,
        const Family & family) -> Progression;

    auto terms() const noexcept -> std::span<const int> { return terms_; }
    auto size() const noexcept -> int { return static_cast<int>(terms_.size()); }
    auto first() const noexcept -> int { return terms_.front(); }
    auto last() const noexcept -> int { return terms_.back(); }
    auto low_difference() const noexcept -> int { return low_difference_; }
    auto family() const noexcept -> const Family & { return family_; }

    friend auto operator==(const Progression &, const Progression &) -> bool = default;

private:
    std::vector<int> terms_;
    int low_difference_;
    Family family_;
};

/// True iff every successive gap of `terms` is allowed for `family` at low-difference d.
/// Throws InvalidInput for fewer than two terms, non-increasing or non-positive terms, or d < 1.
auto validate_progression(std::span<const int> terms, int low_difference, const Family & family) -> bool;

auto conjugate_vector(const Progression & p) -> ConjugateVector;

/// Throws InvalidInput if an entry is >= m or the vector is not a Semi one.
auto frequency_vector(const ConjugateVector & u, int scope) -> FrequencyVector;

/// min(x, n - y): how many lexicographically smaller single-element replacements exist
/// for the adjacent conjugate entries "xy" at diameter n.
auto pair_multiplicity(int x, int y, int diameter) -> int;

/// Number of points whose color is forced away from the progression's color when it is
/// primary. Semi: sum of entries. Quasi: last entry plus pair multiplicities.
auto weight(const ConjugateVector & u) -> int;

/// The forced points themselves, ascending. |result| == weight(conjugate_vector(p)).
auto forced_elements(const Progression & p) -> std::vector<int>;

/// The lexicographically smaller progression witnessing that `forced` must differ in color
/// from p. Semi: `forced` is inserted and the last term dropped. Quasi: `forced` replaces the
/// term it precedes. Throws InvalidInput if `forced` is not in forced_elements(p).
auto exchange_progression(const Progression & p, int forced) -> Progression;

/// The monochromatic k-term progression with first term a and low-difference d whose
/// conjugate vector is lexicographically least, if any lies inside [1, N].
auto primary_progression(const Coloring & chi, int first, int low_difference, int k,
    const Family & family) -> std::optional<Progression>;

/// First monochromatic k-term progression in (a, d, conjugate) lexicographic order.
auto find_monochromatic(const Coloring & chi, int k, const Family & family) -> std::optional<Progression>;

/// Calls `visit` for every k-term progression with first term a and low-difference d that
/// lies inside [1, n_points], in ascending conjugate order.
auto for_each_progression(int first, int low_difference, int k, const Family & family, int n_points,
    const std::function<void(const Progression &)> & visit) -> void;

/// Largest low-difference admitting a k-term progression starting at a inside [1, n_points].
inline auto max_low_difference(int first, int k, int n_points) noexcept -> int
{
    return k < 2 || n_points < first ? 0 : (n_points - first) / (k - 1);
}

} // namespace gpramsey
