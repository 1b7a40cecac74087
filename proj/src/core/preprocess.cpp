#include "pqforecast/core/preprocess.hpp"

#include "pqforecast/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pqf::core {

using namespace std::chrono;

double percentile(std::vector<double> values, double q) {
	if (values.empty()) {
		throw std::invalid_argument("percentile of empty sample");
	}
	if (!(q >= 0.0 && q <= 1.0)) {
		throw std::invalid_argument("percentile level outside [0, 1]");
	}
	std::sort(values.begin(), values.end());
	const double h = static_cast<double>(values.size() - 1) * q;
	const auto lo = static_cast<std::size_t>(std::floor(h));
	const auto hi = std::min(lo + 1, values.size() - 1);
	return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<WeeklyAggregate> aggregate_weekly(const RawSeries& raw) {
	if (raw.samples.empty()) {
		throw DataError("no data");
	}
	validate(raw);

	const Timestamp first = raw.samples.front().time;
	const Timestamp end = raw.samples.back().time + kSampleInterval;

	sys_days monday = floor<days>(first);
	if (sys_seconds{monday} < first) {
		monday += days{1};
	}
	while (weekday{monday} != Monday) {
		monday += days{1};
	}
	if (sys_seconds{monday + days{7}} > end) {
		throw DataError("span too short");
	}

	std::vector<WeeklyAggregate> out;
	auto it = raw.samples.begin();
	std::vector<double> bucket;
	bucket.reserve(kSlotsPerWeek);
	for (; sys_seconds{monday + days{7}} <= end; monday += days{7}) {
		const sys_seconds lo{monday};
		const sys_seconds hi{monday + days{7}};
		while (it != raw.samples.end() && it->time < lo) {
			++it;
		}
		bucket.clear();
		while (it != raw.samples.end() && it->time < hi) {
			bucket.push_back(it->value);
			++it;
		}
		WeeklyAggregate agg{iso_week_of(monday), std::nullopt, static_cast<int>(bucket.size())};
		if (agg.present_count >= kMinValidSlots) {
			agg.p95 = percentile(bucket, 0.95);
		}
		out.push_back(agg);
	}
	return out;
}

std::string to_string(RejectReason reason) {
	switch (reason) {
	case RejectReason::TooManyGaps:
		return "too-many-gaps";
	case RejectReason::UnfillableGap:
		return "unfillable-gap";
	}
	return "unknown";
}

FillResult fill_gaps(const std::string& series_id, std::span<const WeeklyAggregate> aggregates) {
	if (aggregates.empty()) {
		throw DataError(series_id + ": no weekly aggregates");
	}
	for (std::size_t i = 1; i < aggregates.size(); ++i) {
		if (weeks_between(aggregates[i - 1].week, aggregates[i].week) != 1) {
			throw std::invalid_argument(series_id + ": weekly aggregates are not on consecutive weeks");
		}
	}

	const int total = static_cast<int>(aggregates.size());
	const int absent = static_cast<int>(
	    std::count_if(aggregates.begin(), aggregates.end(), [](const auto& a) { return !a.p95.has_value(); }));

	WeeklySeries series;
	series.series_id = series_id;
	series.start_week = aggregates.front().week;
	series.values.reserve(aggregates.size());
	series.filled.reserve(aggregates.size());

	int last_present = -1;
	for (int i = 0; i < total; ++i) {
		const auto& agg = aggregates[static_cast<std::size_t>(i)];
		if (agg.p95) {
			series.values.push_back(*agg.p95);
			series.filled.push_back(false);
			last_present = i;
			continue;
		}
		if (last_present < 0 || i - last_present > kMaxFillDistance) {
			return GapRejection{series_id, RejectReason::UnfillableGap, absent, total};
		}
		series.values.push_back(*aggregates[static_cast<std::size_t>(last_present)].p95);
		series.filled.push_back(true);
	}
	// absent / total > 0.20, in integers
	if (5 * absent > total) {
		return GapRejection{series_id, RejectReason::TooManyGaps, absent, total};
	}
	return series;
}

WeeklySeries normalize(const WeeklySeries& native, const PlanningLevel& level) {
	const auto key = SeriesKey::parse(native.series_id);
	if (key.parameter != level.parameter || key.voltage_level != level.voltage_level) {
		throw ConfigError("planning level " + level.parameter + "@" + level.voltage_level +
		                  " does not match series " + native.series_id);
	}
	if (!(level.level > 0.0) || !std::isfinite(level.level)) {
		throw ConfigError("planning level for " + level.parameter + "@" + level.voltage_level +
		                  " must be positive");
	}
	WeeklySeries out = native;
	for (auto& v : out.values) {
		v = 100.0 * v / level.level;
	}
	return out;
}

TrainTestSplit split_train_test(const WeeklySeries& series, int train_len, int horizon) {
	if (train_len <= 0 || horizon <= 0) {
		throw std::invalid_argument("train length and horizon must be positive");
	}
	const auto need = static_cast<std::size_t>(train_len + horizon);
	if (series.size() < need) {
		throw DataError("insufficient history: " + series.series_id + " has " + std::to_string(series.size()) +
		                " weeks, needs " + std::to_string(need));
	}
	const auto mid = series.values.begin() + train_len;
	return {std::vector<double>(series.values.begin(), mid), std::vector<double>(mid, mid + horizon)};
}

} // namespace pqf::core
