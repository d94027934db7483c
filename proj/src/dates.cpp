#include "envcheck/dates.hpp"

#include <charconv>
#include <cstdio>

#include "envcheck/error.hpp"

namespace envcheck {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::SchemaError, "bad date '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Date parse_date(std::string_view text) {
    std::string_view d = text.substr(0, 10);
    if (d.size() != 10 || d[4] != '-' || d[7] != '-' || (text.size() > 10 && text[10] != 'T' && text[10] != ' ')) {
        throw Error(ErrorCode::SchemaError, "bad date '" + std::string(text) + "'");
    }
    Date out{std::chrono::year{parse_int(d.substr(0, 4), text)},
             std::chrono::month{static_cast<unsigned>(parse_int(d.substr(5, 2), text))},
             std::chrono::day{static_cast<unsigned>(parse_int(d.substr(8, 2), text))}};
    if (!out.ok()) throw Error(ErrorCode::SchemaError, "invalid calendar date '" + std::string(text) + "'");
    return out;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                  static_cast<unsigned>(d.day()));
    return buf;
}

long days_between(const Date& a, const Date& b) {
    return (std::chrono::sys_days{b} - std::chrono::sys_days{a}).count();
}

Date add_days(const Date& d, long days) { return Date{std::chrono::sys_days{d} + std::chrono::days{days}}; }

Date today_utc() { return Date{std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now())}; }

}  // namespace envcheck
