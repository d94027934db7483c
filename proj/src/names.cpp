#include "envcheck/names.hpp"

#include <cctype>

#include "envcheck/error.hpp"

namespace envcheck {

namespace {

bool is_separator(char c) noexcept { return c == '.' || c == '_' || c == '-'; }

}  // namespace

bool is_valid_name(std::string_view raw) noexcept {
    if (raw.empty() || is_separator(raw.front()) || is_separator(raw.back())) return false;
    for (char c : raw) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && !is_separator(c)) return false;
    }
    return true;
}

NormalizedName NormalizedName::from(std::string_view raw) {
    if (!is_valid_name(raw)) {
        throw Error(ErrorCode::InvalidName, "'" + std::string(raw) + "'");
    }
    std::string out;
    out.reserve(raw.size());
    bool pending_dash = false;
    for (char c : raw) {
        if (is_separator(c)) {
            pending_dash = true;
            continue;
        }
        if (pending_dash && !out.empty()) out.push_back('-');
        pending_dash = false;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return NormalizedName(std::move(out));
}

NormalizedName normalize_name(std::string_view raw) { return NormalizedName::from(raw); }

}  // namespace envcheck
