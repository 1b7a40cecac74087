#include "pqforecast/io/weekly_csv.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/io/csv.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace pqf::io {

std::map<std::string, std::vector<WeeklyRow>> read_weekly_rows(const std::string& path) {
	CsvReader reader(path, kWeeklyHeader);
	std::map<std::string, std::vector<WeeklyRow>> out;
	std::vector<std::string> f;
	while (reader.next(f)) {
		if (f[0].empty()) {
			reader.fail("empty series_id");
		}
		WeeklyRow row;
		row.week = {static_cast<int>(reader.to_int(f[1], "iso_year")), static_cast<int>(reader.to_int(f[2], "iso_week"))};
		if (!core::is_valid(row.week)) {
			reader.fail("invalid ISO week " + f[1] + "-W" + f[2]);
		}
		row.value = reader.to_double(f[3], "utilization_percent");
		if (f[4] != "0" && f[4] != "1") {
			reader.fail("filled must be 0 or 1");
		}
		row.filled = f[4] == "1";
		out[f[0]].push_back(row);
	}
	for (auto& [id, rows] : out) {
		std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.week < b.week; });
		for (std::size_t i = 1; i < rows.size(); ++i) {
			if (rows[i].week == rows[i - 1].week) {
				throw DataError(path + ": duplicate week " + core::to_string(rows[i].week) + " for series " + id);
			}
		}
	}
	return out;
}

std::vector<core::WeeklySeries> read_weekly_csv(const std::string& path) {
	std::vector<core::WeeklySeries> out;
	for (auto& [id, rows] : read_weekly_rows(path)) {
		core::WeeklySeries s;
		s.series_id = id;
		s.start_week = rows.front().week;
		for (std::size_t i = 0; i < rows.size(); ++i) {
			if (i > 0 && core::weeks_between(rows[i - 1].week, rows[i].week) != 1) {
				throw DataError(path + ": series " + id + " has a gap after week " + core::to_string(rows[i - 1].week));
			}
			s.values.push_back(rows[i].value);
			s.filled.push_back(rows[i].filled);
		}
		out.push_back(std::move(s));
	}
	return out;
}

std::vector<core::WeeklyAggregate> rows_to_aggregates(std::span<const WeeklyRow> rows) {
	std::vector<core::WeeklyAggregate> out;
	if (rows.empty()) {
		return out;
	}
	core::IsoWeek week = rows.front().week;
	for (const auto& row : rows) {
		while (week < row.week) {
			out.push_back({week, std::nullopt, 0});
			week = core::next_week(week);
		}
		out.push_back({row.week, row.value, core::kSlotsPerWeek});
		week = core::next_week(row.week);
	}
	return out;
}

void write_weekly_csv(const std::string& path, std::span<const core::WeeklySeries> series) {
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "series_id,iso_year,iso_week,utilization_percent,filled\n");
	for (const auto& s : series) {
		const auto id = quote_csv_field(s.series_id);
		for (std::size_t i = 0; i < s.size(); ++i) {
			const auto w = s.week_at(i);
			fmt::format_to(std::back_inserter(buf), "{},{},{},{},{}\n", id, w.year, w.week, format_double(s.values[i]),
			               s.filled[i] ? 1 : 0);
		}
	}
	write_text_file(path, std::string_view(buf.data(), buf.size()));
}

void write_rejection_csv(const std::string& path, std::span<const Rejection> rejections) {
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "series_id,reason,absent_weeks,total_weeks\n");
	for (const auto& r : rejections) {
		fmt::format_to(std::back_inserter(buf), "{},{},{},{}\n", quote_csv_field(r.series_id), quote_csv_field(r.reason),
		               r.absent_weeks, r.total_weeks);
	}
	write_text_file(path, std::string_view(buf.data(), buf.size()));
}

std::vector<Rejection> read_rejection_csv(const std::string& path) {
	CsvReader reader(path, kRejectionHeader);
	std::vector<Rejection> out;
	std::vector<std::string> f;
	while (reader.next(f)) {
		out.push_back({f[0], f[1], static_cast<int>(reader.to_int(f[2], "absent_weeks")),
		               static_cast<int>(reader.to_int(f[3], "total_weeks"))});
	}
	return out;
}

} // namespace pqf::io
