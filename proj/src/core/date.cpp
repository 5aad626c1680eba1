#include "epifuse/core/date.hpp"

#include "epifuse/core/errors.hpp"

#include <chrono>
#include <cstdio>

namespace epifuse {

namespace chr = std::chrono;

Date Date::from_ymd(int year, int month, int day)
{
    chr::year_month_day ymd{chr::year{year}, chr::month{static_cast<unsigned>(month)},
                            chr::day{static_cast<unsigned>(day)}};
    if (!ymd.ok()) {
        throw DataError("invalid calendar date: " + std::to_string(year) + "-" +
                        std::to_string(month) + "-" + std::to_string(day));
    }
    Date d;
    d.days_ = static_cast<std::int32_t>(chr::sys_days{ymd}.time_since_epoch().count());
    return d;
}

Date Date::parse(std::string_view iso)
{
    int y = 0, m = 0, d = 0;
    char tail = '\0';
    std::string s(iso);
    if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3 || s.size() != 10) {
        throw DataError("malformed date (expected YYYY-MM-DD): '" + s + "'");
    }
    return from_ymd(y, m, d);
}

std::string Date::to_string() const
{
    chr::year_month_day ymd{chr::sys_days{chr::days{days_}}};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

} // namespace epifuse
