#include "isacl/dates.hpp"

#include <cstdio>

#include "isacl/errors.hpp"

namespace isacl {

Date parse_date(const std::string& text) {
    int y = 0, m = 0, d = 0;
    char trailing = '\0';
    // The %c probe rejects trailing garbage ("2020-01-02x", "2020-01-02 ").
    if (text.size() != 10 ||
        std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &trailing) != 3) {
        throw ParseError("invalid date '" + text + "': expected YYYY-MM-DD");
    }
    const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                    std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) {
        throw ParseError("invalid date '" + text + "': no such calendar day");
    }
    return date;
}

std::string format_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

Date add_days(const Date& date, long long days) {
    return Date{std::chrono::sys_days{date} + std::chrono::days{days}};
}

long long days_between(const Date& a, const Date& b) {
    return (std::chrono::sys_days{b} - std::chrono::sys_days{a}).count();
}

}  // namespace isacl
