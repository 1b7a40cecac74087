#pragma once

#include "pqforecast/evaluation/corpus.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pqf::evaluation {

/// Summary of the mean sMAPE values of a group of ensembles.
struct GroupAggregate {
	int key = 0; // ensemble size, or canonical model index
	int count = 0;
	double mean = 0.0;
	double p25 = 0.0;
	double median = 0.0;
	double p75 = 0.0;
	double min = 0.0;
	double max = 0.0;
};

struct CompositionReport {
	int top_n = 0;
	std::vector<std::string> warnings;
	std::array<int, 8> model_slots{};    // member slots held by each public model
	std::array<double, 8> model_share{}; // model_slots / total slots
	std::map<int, int> size_histogram;   // ensemble size -> count
	std::map<std::string, int> method_histogram;
	std::vector<GroupAggregate> by_size;   // whole leaderboard, grouped by size
	std::vector<GroupAggregate> by_member; // whole leaderboard, ensembles containing each model
};

/// Composition of the top_n ensembles plus size and member aggregates over
/// the whole ensemble leaderboard. Rows that are not ensemble labels are
/// ignored. A top_n beyond the cohort is clipped with a warning.
CompositionReport composition_analysis(const Leaderboard& ensembles, int top_n);

/// Mean sMAPE aggregates per ensemble size, optionally for one method only.
std::vector<GroupAggregate> size_aggregates(const Leaderboard& ensembles,
                                            std::optional<ensemble::CombinationMethod> method = std::nullopt);

struct ComparisonPoint {
	std::string series_id;
	double individual_smape = 0.0;
	double ensemble_smape = 0.0;
	double improvement = 0.0; // percent, positive when the ensemble is better
};

struct ComparisonReport {
	std::string individual_producer;
	std::string ensemble_producer;
	std::vector<ComparisonPoint> points;             // by series
	std::vector<std::pair<double, double>> ecdf;     // (improvement, cumulative fraction)
	int wins = 0;
	double win_fraction = 0.0;
	double median_improvement_given_win = 0.0; // NaN without wins
	double median_improvement = 0.0;
};

/// Paired per-series comparison of two producers. Each span must hold the
/// records of a single producer. Relative improvement is
/// (individual - ensemble) / individual * 100; for a zero individual sMAPE it
/// is 0 when the ensemble is also perfect and -100 otherwise.
/// Throws DataError when the series sets differ.
ComparisonReport compare_best(std::span<const EvalRecord> individual, std::span<const EvalRecord> ensemble);

/// compare_best between the leaders of the two leaderboards.
ComparisonReport compare_leaders(const CorpusEvaluation& evaluation);

/// Number of leaderboard rows with mean sMAPE strictly below `threshold`.
int count_better_than(const Leaderboard& board, double threshold);

} // namespace pqf::evaluation
