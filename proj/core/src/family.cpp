#include <gpramsey/error.hpp>
#include <gpramsey/family.hpp>

namespace gpramsey {

auto Family::semi(int scope) -> Family
{
    if (scope < 1)
        throw InvalidInput("semi-progression scope must be >= 1, got " + std::to_string(scope));
    return Family(FamilyKind::Semi, scope);
}

auto Family::quasi(int diameter) -> Family
{
    if (diameter < 0)
        throw InvalidInput("quasi-progression diameter must be >= 0, got " + std::to_string(diameter));
    return Family(FamilyKind::Quasi, diameter);
}

auto Family::parse(std::string_view kind, int param) -> Family
{
    if (kind == "semi")
        return semi(param);
    if (kind == "quasi")
        return quasi(param);
    throw InvalidInput("unknown family '" + std::string(kind) + "' (expected semi or quasi)");
}

auto Family::entry_for_gap(int low_difference, int gap) const noexcept -> int
{
    if (low_difference < 1 || gap < low_difference)
        return -1;
    int entry = -1;
    if (is_semi()) {
        if (gap % low_difference != 0)
            return -1;
        entry = gap / low_difference - 1;
    }
    else
        entry = gap - low_difference;
    return entry <= max_entry() ? entry : -1;
}

auto Family::allowed_gaps(int low_difference) const -> std::vector<int>
{
    std::vector<int> gaps;
    gaps.reserve(static_cast<std::size_t>(gap_count()));
    for (int u = 0; u <= max_entry(); ++u)
        gaps.push_back(gap(low_difference, u));
    return gaps;
}

auto Family::describe() const -> std::string
{
    return name() + (is_semi() ? "(m=" : "(n=") + std::to_string(param_) + ")";
}

} // namespace gpramsey
