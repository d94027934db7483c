#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace envcheck {

/// A distribution name in canonical form: lowercase, with every run of
/// '.', '_' and '-' collapsed into one dash.
class NormalizedName {
public:
    NormalizedName() = default;

    /// Normalizes `raw`; throws Error{InvalidName} on empty input, on
    /// characters outside [A-Za-z0-9._-], or on a leading/trailing separator.
    static NormalizedName from(std::string_view raw);

    [[nodiscard]] const std::string& value() const noexcept { return value_; }
    [[nodiscard]] bool empty() const noexcept { return value_.empty(); }

    friend bool operator==(const NormalizedName&, const NormalizedName&) = default;
    friend auto operator<=>(const NormalizedName&, const NormalizedName&) = default;

private:
    explicit NormalizedName(std::string v) : value_(std::move(v)) {}
    std::string value_;
};

NormalizedName normalize_name(std::string_view raw);

/// True when `raw` consists only of characters accepted by normalize_name.
bool is_valid_name(std::string_view raw) noexcept;

}  // namespace envcheck
