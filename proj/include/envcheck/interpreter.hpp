#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "envcheck/dates.hpp"
#include "envcheck/version.hpp"

namespace envcheck {

/// An interpreter feature release, e.g. 3.7.
struct InterpreterVersion {
    int major = 3;
    int minor = 0;

    /// Accepts "X.Y" (a trailing ".Z" is dropped). Throws Error{InvalidVersion}.
    static InterpreterVersion parse(std::string_view text);
    [[nodiscard]] std::string str() const { return std::to_string(major) + "." + std::to_string(minor); }
    [[nodiscard]] Version as_version() const { return Version::parse(str()); }

    friend auto operator<=>(const InterpreterVersion&, const InterpreterVersion&) = default;
};

/// Release date of each interpreter feature release.
class InterpreterReleaseTable {
public:
    InterpreterReleaseTable() = default;
    /// Throws Error{SchemaError} when dates do not strictly increase within a
    /// major series.
    explicit InterpreterReleaseTable(std::map<InterpreterVersion, Date> dates);

    /// 2.7 and 3.0 through 3.12 with their first final-release dates.
    static const InterpreterReleaseTable& embedded();
    /// {"3.7": "2018-06-27", ...}
    static InterpreterReleaseTable load(const std::filesystem::path& path);
    static InterpreterReleaseTable from_json_text(std::string_view text);

    [[nodiscard]] const std::map<InterpreterVersion, Date>& dates() const noexcept { return dates_; }
    [[nodiscard]] bool contains(const InterpreterVersion& v) const { return dates_.contains(v); }
    /// Ascending by version.
    [[nodiscard]] std::vector<InterpreterVersion> versions() const;

private:
    std::map<InterpreterVersion, Date> dates_;
};

}  // namespace envcheck
