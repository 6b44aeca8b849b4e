#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpramsey {

using Color = std::uint8_t;

inline constexpr int max_colors = 36;

/// An r-coloring of the interval [1, N]. Positions are 1-based, colors are 0..r-1.
class Coloring {
public:
    Coloring(int colors, std::vector<Color> values);

    /// All N points receive color 0.
    static auto constant(int colors, int n_points, Color c = 0) -> Coloring;

    /// Parses base-r digits ("0110", or with r > 10, 0-9 then a-z).
    static auto from_digits(int colors, std::string_view digits) -> Coloring;

    /// Parses a letter pattern such as "BRRBBRRB" where the i-th distinct letter of
    /// `alphabet` maps to color i.
    static auto from_letters(std::string_view pattern, std::string_view alphabet) -> Coloring;

    /// Decodes the index-th coloring of [1, n_points] in base-r counter order (point 1 is
    /// the least significant digit).
    static auto from_index(int colors, int n_points, std::uint64_t index) -> Coloring;

    auto colors() const noexcept -> int { return colors_; }
    auto n_points() const noexcept -> int { return static_cast<int>(values_.size()); }

    /// Color of the 1-based point x.
    auto at(int x) const -> Color { return values_[static_cast<std::size_t>(x - 1)]; }
    auto set(int x, Color c) -> void;

    auto values() const noexcept -> std::span<const Color> { return values_; }

    auto to_digits() const -> std::string;

    /// Swaps colors so that first occurrences appear in ascending order.
    auto canonical() const -> Coloring;

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

private:
    int colors_;
    std::vector<Color> values_;
};

auto digit_char(Color c) -> char;
auto digit_value(char ch) -> int;

} // namespace gpramsey
