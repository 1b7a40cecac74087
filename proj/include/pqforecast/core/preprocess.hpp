#pragma once

#include "pqforecast/core/series.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pqf::core {

/// Linear interpolation between the closest order statistics
/// (h = (n - 1) q, the usual "type 7" estimator). `q` in [0, 1].
double percentile(std::vector<double> values, double q);

/// Weekly 95th percentiles over every full Monday-to-Sunday week inside the
/// data span. A week is valid when at least 958 of its 1008 slots are present.
/// Throws DataError("no data") or DataError("span too short").
std::vector<WeeklyAggregate> aggregate_weekly(const RawSeries& raw);

enum class RejectReason { TooManyGaps, UnfillableGap };

std::string to_string(RejectReason reason);

struct GapRejection {
	std::string series_id;
	RejectReason reason;
	int absent_weeks = 0;
	int total_weeks = 0;
};

using FillResult = std::variant<WeeklySeries, GapRejection>;

/// Carry-forward gap filling: an absent week takes the most recent present
/// value at most 10 weeks back. Rejects the series when more than 20 % of
/// weeks are absent or when some gap has no donor (leading gaps included).
FillResult fill_gaps(const std::string& series_id, std::span<const WeeklyAggregate> aggregates);

/// Converts native units to utilization: 100 * v / level. The planning level
/// must match the parameter and voltage level encoded in the series id.
WeeklySeries normalize(const WeeklySeries& native, const PlanningLevel& level);

struct TrainTestSplit {
	std::vector<double> train;
	std::vector<double> test;
};

inline constexpr int kTrainWeeks = 105;
inline constexpr int kHorizonWeeks = 52;

/// First `train_len` weeks for fitting, next `horizon` weeks for scoring;
/// anything beyond is ignored. Throws DataError("insufficient history").
TrainTestSplit split_train_test(const WeeklySeries& series, int train_len = kTrainWeeks,
                                int horizon = kHorizonWeeks);

} // namespace pqf::core
