#pragma once

#include <gpramsey/coloring.hpp>
#include <gpramsey/family.hpp>

#include <optional>
#include <random>
#include <vector>

namespace gpramsey::testing {

// Every entry vector in [0, max_entry]^length, odometer order (= lexicographic).
inline auto all_entry_vectors(int length, int max_entry) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(length), 0);
    while (true) {
        out.push_back(v);
        int i = length - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == max_entry)
            v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            return out;
        ++v[static_cast<std::size_t>(i)];
    }
}

// Terms from raw gap arithmetic, without going through the library.
inline auto terms_for(int a, int d, const std::vector<int> & entries, bool semi) -> std::vector<int>
{
    std::vector<int> t{a};
    for (int u : entries)
        t.push_back(t.back() + (semi ? (u + 1) * d : d + u));
    return t;
}

// Brute-force (a, d)-primary: scan every entry vector, keep the lex-least monochromatic one.
inline auto brute_primary(const Coloring & chi, int a, int d, int k, bool semi, int param)
    -> std::optional<std::vector<int>>
{
    int max_entry = semi ? param - 1 : param;
    for (const auto & e : all_entry_vectors(k - 1, max_entry)) {
        auto t = terms_for(a, d, e, semi);
        if (t.back() > chi.n_points())
            continue;
        bool mono = true;
        for (int x : t)
            mono = mono && chi.at(x) == chi.at(a);
        if (mono)
            return t;
    }
    return std::nullopt;
}

inline auto random_coloring(std::mt19937_64 & rng, int colors, int n) -> Coloring
{
    std::vector<Color> v(static_cast<std::size_t>(n));
    for (auto & c : v)
        c = static_cast<Color>(rng() % static_cast<std::uint64_t>(colors));
    return Coloring(colors, std::move(v));
}

} // namespace gpramsey::testing
