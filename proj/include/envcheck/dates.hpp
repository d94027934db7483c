#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace envcheck {

using Date = std::chrono::year_month_day;

/// Parses "YYYY-MM-DD"; an ISO timestamp ("YYYY-MM-DDTHH:MM:SS...") is cut to
/// its date part. Throws Error{SchemaError}.
Date parse_date(std::string_view text);
std::string format_date(const Date& d);

/// b - a in days.
long days_between(const Date& a, const Date& b);
Date add_days(const Date& d, long days);

/// Current UTC date.
Date today_utc();

}  // namespace envcheck
