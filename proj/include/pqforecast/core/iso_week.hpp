#pragma once

#include <chrono>
#include <compare>
#include <string>

namespace pqf::core {

/// ISO-8601 calendar week. Weeks run Monday 00:00 to Sunday 24:00 UTC.
struct IsoWeek {
	int year = 0;
	int week = 0;

	auto operator<=>(const IsoWeek&) const = default;
};

IsoWeek iso_week_of(std::chrono::sys_days day);
std::chrono::sys_days monday_of(IsoWeek week);
IsoWeek next_week(IsoWeek week);

/// Signed number of weeks from `from` to `to`.
int weeks_between(IsoWeek from, IsoWeek to);

/// Number of ISO weeks in an ISO year (52 or 53).
int weeks_in_iso_year(int year);

bool is_valid(IsoWeek week);
std::string to_string(IsoWeek week);

} // namespace pqf::core
