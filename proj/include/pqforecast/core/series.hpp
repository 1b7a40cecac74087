#pragma once

#include "pqforecast/core/iso_week.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pqf::core {

using Timestamp = std::chrono::sys_seconds;

inline constexpr std::chrono::minutes kSampleInterval{10};
inline constexpr int kSlotsPerWeek = 7 * 24 * 6;   // 1008 ten-minute intervals
inline constexpr int kMinValidSlots = 958;         // ceil(0.95 * 1008)
inline constexpr int kMaxFillDistance = 10;        // weeks
inline constexpr double kMaxFilledFraction = 0.20;

/// Components of a series identifier of the form `site/parameter/voltage`.
struct SeriesKey {
	std::string site;
	std::string parameter;
	std::string voltage_level;

	/// Throws ConfigError when `series_id` does not have three '/'-separated parts.
	static SeriesKey parse(const std::string& series_id);
};

struct Sample {
	Timestamp time;
	double value = 0.0;
};

/// Ten-minute measurements of one (site, parameter) pair, in native units.
struct RawSeries {
	std::string series_id;
	std::vector<Sample> samples;
};

/// Throws DataError unless timestamps are strictly increasing and on the
/// ten-minute grid, and values are finite and nonnegative.
void validate(const RawSeries& raw);

struct PlanningLevel {
	std::string parameter;
	std::string voltage_level;
	double level = 0.0;
};

struct WeeklyAggregate {
	IsoWeek week;
	std::optional<double> p95;
	int present_count = 0;
};

/// Gap-free weekly series on consecutive ISO weeks. After normalization the
/// values are utilization in percent of the planning level.
struct WeeklySeries {
	std::string series_id;
	IsoWeek start_week;
	std::vector<double> values;
	std::vector<bool> filled;

	std::size_t size() const { return values.size(); }
	double filled_fraction() const;
	IsoWeek week_at(std::size_t index) const;
};

} // namespace pqf::core
