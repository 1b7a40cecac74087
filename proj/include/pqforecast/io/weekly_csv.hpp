#pragma once

#include "pqforecast/core/preprocess.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace pqf::io {

inline const std::vector<std::string> kWeeklyHeader = {"series_id", "iso_year", "iso_week", "utilization_percent",
                                                       "filled"};

struct WeeklyRow {
	core::IsoWeek week;
	double value = 0.0;
	bool filled = false;
};

/// All rows per series, sorted by week. Duplicate weeks and invalid ISO weeks
/// throw DataError.
std::map<std::string, std::vector<WeeklyRow>> read_weekly_rows(const std::string& path);

/// Weekly series that must be gap-free; a missing week throws DataError
/// naming the series.
std::vector<core::WeeklySeries> read_weekly_csv(const std::string& path);

/// Rows of one series as weekly aggregates from the first to the last week,
/// with missing rows as absent weeks.
std::vector<core::WeeklyAggregate> rows_to_aggregates(std::span<const WeeklyRow> rows);

void write_weekly_csv(const std::string& path, std::span<const core::WeeklySeries> series);

/// One line of the preprocessing rejection report.
struct Rejection {
	std::string series_id;
	std::string reason;
	int absent_weeks = 0;
	int total_weeks = 0;
};

inline const std::vector<std::string> kRejectionHeader = {"series_id", "reason", "absent_weeks", "total_weeks"};

void write_rejection_csv(const std::string& path, std::span<const Rejection> rejections);
std::vector<Rejection> read_rejection_csv(const std::string& path);

} // namespace pqf::io
