#pragma once

#include <gpramsey/coloring.hpp>
#include <gpramsey/family.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace gpramsey {

/// Witness file contents. On disk:
///
///   {"family":"semi","param":1,"r":2,"k":3,"n_points":8}
///   01100110
///
/// The second line holds one base-r digit per point, point i+1 at index i.
struct WitnessFile {
    Family family;
    int k;
    Coloring coloring;
};

auto format_witness(const WitnessFile & w) -> std::string;
auto parse_witness(std::string_view text) -> WitnessFile;

auto write_witness(const std::filesystem::path & path, const WitnessFile & w) -> void;
auto read_witness(const std::filesystem::path & path) -> WitnessFile;

} // namespace gpramsey
