#include "pqforecast/core/series.hpp"

#include "pqforecast/core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pqf::core {

SeriesKey SeriesKey::parse(const std::string& series_id) {
	const auto first = series_id.find('/');
	const auto second = first == std::string::npos ? std::string::npos : series_id.find('/', first + 1);
	if (second == std::string::npos || series_id.find('/', second + 1) != std::string::npos) {
		throw ConfigError("series id '" + series_id + "' is not of the form site/parameter/voltage");
	}
	SeriesKey key{series_id.substr(0, first), series_id.substr(first + 1, second - first - 1),
	              series_id.substr(second + 1)};
	if (key.site.empty() || key.parameter.empty() || key.voltage_level.empty()) {
		throw ConfigError("series id '" + series_id + "' has an empty component");
	}
	return key;
}

void validate(const RawSeries& raw) {
	const auto grid = std::chrono::duration_cast<std::chrono::seconds>(kSampleInterval).count();
	for (std::size_t i = 0; i < raw.samples.size(); ++i) {
		const auto& s = raw.samples[i];
		if (s.time.time_since_epoch().count() % grid != 0) {
			throw DataError(raw.series_id + ": sample " + std::to_string(i) + " is off the 10-minute grid");
		}
		if (!std::isfinite(s.value) || s.value < 0.0) {
			throw DataError(raw.series_id + ": sample " + std::to_string(i) + " has a negative or non-finite value");
		}
		if (i > 0 && s.time <= raw.samples[i - 1].time) {
			throw DataError(raw.series_id + ": timestamps not strictly increasing at sample " + std::to_string(i));
		}
	}
}

double WeeklySeries::filled_fraction() const {
	if (filled.empty()) {
		return 0.0;
	}
	const auto n = std::count(filled.begin(), filled.end(), true);
	return static_cast<double>(n) / static_cast<double>(filled.size());
}

IsoWeek WeeklySeries::week_at(std::size_t index) const {
	return iso_week_of(monday_of(start_week) + std::chrono::days{7 * static_cast<long>(index)});
}

} // namespace pqf::core
