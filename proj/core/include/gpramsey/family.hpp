#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gpramsey {

enum class FamilyKind { Semi, Quasi };

/// A progression family: semi-progressions of scope m, or quasi-progressions of diameter n.
///
/// For low-difference d the allowed gaps are {d, 2d, ..., md} (Semi) or {d, d+1, ..., d+n}
/// (Quasi). Either way the gap is a strictly increasing function of the conjugate entry
/// u in [0, max_entry()], so lexicographic order on conjugate vectors coincides with
/// lexicographic order on the term sequences of a fixed (a, d).
class Family {
public:
    static auto semi(int scope) -> Family;
    static auto quasi(int diameter) -> Family;

    /// Parses "semi"/"quasi" plus the parameter.
    static auto parse(std::string_view kind, int param) -> Family;

    auto kind() const noexcept -> FamilyKind { return kind_; }
    auto param() const noexcept -> int { return param_; }
    auto is_semi() const noexcept -> bool { return kind_ == FamilyKind::Semi; }

    /// Largest conjugate entry: m - 1 for Semi, n for Quasi.
    auto max_entry() const noexcept -> int { return is_semi() ? param_ - 1 : param_; }

    /// Number of distinct gaps for a fixed low-difference.
    auto gap_count() const noexcept -> int { return max_entry() + 1; }

    auto gap(int low_difference, int entry) const noexcept -> int
    {
        return is_semi() ? (entry + 1) * low_difference : low_difference + entry;
    }

    /// Conjugate entry for a gap, or -1 when the gap is not allowed for this low-difference.
    auto entry_for_gap(int low_difference, int gap) const noexcept -> int;

    auto allowed_gaps(int low_difference) const -> std::vector<int>;

    auto name() const -> std::string { return is_semi() ? "semi" : "quasi"; }

    /// Human-readable form, e.g. "semi(m=2)".
    auto describe() const -> std::string;

    friend auto operator==(const Family &, const Family &) -> bool = default;

private:
    Family(FamilyKind kind, int param) : kind_(kind), param_(param) {}

    FamilyKind kind_;
    int param_;
};

} // namespace gpramsey
