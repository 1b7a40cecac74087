#include "pqforecast/core/iso_week.hpp"

namespace pqf::core {

using namespace std::chrono;

namespace {

sys_days week_one_monday(int iso_year) {
	// Week 1 is the week containing January 4th.
	const sys_days jan4 = year{iso_year} / January / 4;
	const auto offset = weekday{jan4}.iso_encoding() - 1;
	return jan4 - days{offset};
}

} // namespace

IsoWeek iso_week_of(sys_days day) {
	const auto dow = weekday{day}.iso_encoding();
	// The Thursday of the week decides the ISO year.
	const sys_days thursday = day + days{4 - static_cast<int>(dow)};
	const int iso_year = static_cast<int>(year_month_day{thursday}.year());
	const auto delta = (day - week_one_monday(iso_year)).count();
	return {iso_year, static_cast<int>(delta / 7) + 1};
}

sys_days monday_of(IsoWeek week) {
	return week_one_monday(week.year) + days{7 * (week.week - 1)};
}

IsoWeek next_week(IsoWeek week) {
	return iso_week_of(monday_of(week) + days{7});
}

int weeks_between(IsoWeek from, IsoWeek to) {
	return static_cast<int>((monday_of(to) - monday_of(from)).count() / 7);
}

int weeks_in_iso_year(int iso_year) {
	return iso_week_of(sys_days{year{iso_year} / December / 28}).week;
}

bool is_valid(IsoWeek week) {
	return week.week >= 1 && week.week <= weeks_in_iso_year(week.year);
}

std::string to_string(IsoWeek week) {
	std::string out = std::to_string(week.year) + "-W";
	if (week.week < 10) {
		out += '0';
	}
	return out + std::to_string(week.week);
}

} // namespace pqf::core
