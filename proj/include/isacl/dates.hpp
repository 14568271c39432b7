#pragma once

#include <chrono>
#include <string>

namespace isacl {

using Date = std::chrono::year_month_day;

/// Parses strict ISO "YYYY-MM-DD". Throws ParseError (with the offending
/// text in the message) on malformed input or impossible calendar dates.
Date parse_date(const std::string& text);

/// Formats back to "YYYY-MM-DD".
std::string format_date(const Date& date);

/// Calendar arithmetic through sys_days, so month/year boundaries are exact.
Date add_days(const Date& date, long long days);

/// b - a in days; negative when b precedes a.
long long days_between(const Date& a, const Date& b);

}  // namespace isacl
