#include <gpramsey/coloring.hpp>
#include <gpramsey/error.hpp>

#include <algorithm>
#include <array>

namespace gpramsey {

auto digit_char(Color c) -> char
{
    return c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + (c - 10));
}

auto digit_value(char ch) -> int
{
    if (ch >= '0' && ch <= '9')
        return ch - '0';
    if (ch >= 'a' && ch <= 'z')
        return ch - 'a' + 10;
    return -1;
}

Coloring::Coloring(int colors, std::vector<Color> values) :
    colors_(colors), values_(std::move(values))
{
    if (colors < 2 || colors > max_colors)
        throw InvalidInput("number of colors must be in [2, 36], got " + std::to_string(colors));
    for (auto c : values_)
        if (c >= colors)
            throw InvalidInput("color " + std::to_string(c) + " out of range for r = " + std::to_string(colors));
}

auto Coloring::constant(int colors, int n_points, Color c) -> Coloring
{
    if (n_points < 0)
        throw InvalidInput("negative number of points");
    return Coloring(colors, std::vector<Color>(static_cast<std::size_t>(n_points), c));
}

auto Coloring::from_digits(int colors, std::string_view digits) -> Coloring
{
    std::vector<Color> values;
    values.reserve(digits.size());
    for (char ch : digits) {
        int v = digit_value(ch);
        if (v < 0 || v >= colors)
            throw InvalidInput(std::string("invalid base-") + std::to_string(colors) + " digit '" + ch + "'");
        values.push_back(static_cast<Color>(v));
    }
    return Coloring(colors, std::move(values));
}

auto Coloring::from_letters(std::string_view pattern, std::string_view alphabet) -> Coloring
{
    std::vector<Color> values;
    values.reserve(pattern.size());
    for (char ch : pattern) {
        auto pos = alphabet.find(ch);
        if (pos == std::string_view::npos)
            throw InvalidInput(std::string("letter '") + ch + "' not in alphabet '" + std::string(alphabet) + "'");
        values.push_back(static_cast<Color>(pos));
    }
    return Coloring(std::max<int>(2, static_cast<int>(alphabet.size())), std::move(values));
}

auto Coloring::from_index(int colors, int n_points, std::uint64_t index) -> Coloring
{
    std::vector<Color> values(static_cast<std::size_t>(n_points));
    for (auto & v : values) {
        v = static_cast<Color>(index % static_cast<std::uint64_t>(colors));
        index /= static_cast<std::uint64_t>(colors);
    }
    return Coloring(colors, std::move(values));
}

auto Coloring::set(int x, Color c) -> void
{
    if (c >= colors_)
        throw InvalidInput("color out of range");
    values_.at(static_cast<std::size_t>(x - 1)) = c;
}

auto Coloring::to_digits() const -> std::string
{
    std::string s;
    s.reserve(values_.size());
    for (auto c : values_)
        s.push_back(digit_char(c));
    return s;
}

auto Coloring::canonical() const -> Coloring
{
    std::array<int, max_colors> relabel;
    relabel.fill(-1);
    int next = 0;
    std::vector<Color> values(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        auto & target = relabel[values_[i]];
        if (target < 0)
            target = next++;
        values[i] = static_cast<Color>(target);
    }
    return Coloring(colors_, std::move(values));
}

} // namespace gpramsey
