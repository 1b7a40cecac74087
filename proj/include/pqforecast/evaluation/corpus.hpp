#pragma once

#include "pqforecast/ensemble/combination.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pqf::evaluation {

inline constexpr std::string_view kBenchmarkProducer = "SNaive";

/// producer -> series -> forecast values
using ForecastIndex = std::map<std::string, std::map<std::string, std::vector<double>>>;
/// series -> test-window actuals
using ActualIndex = std::map<std::string, std::vector<double>>;

struct EvalRecord {
	std::string series_id;
	std::string producer;
	double mae = 0.0;
	double smape = 0.0;
	double rank = 1.0;
};

struct LeaderboardRow {
	int rank = 0;
	std::string producer;
	double mean_mae = 0.0;
	double mean_smape = 0.0;
	double mean_rank = 0.0;
	double benchmark_ratio = 0.0;
};

struct Leaderboard {
	std::vector<LeaderboardRow> rows; // ascending mean_smape, ties by producer name

	const LeaderboardRow* find(std::string_view producer) const;
};

/// Records are ordered by series, then producer.
struct CohortResult {
	std::vector<std::string> series;
	std::vector<std::string> producers;
	std::vector<EvalRecord> records;
	Leaderboard leaderboard;

	std::vector<EvalRecord> records_of(std::string_view producer) const;
};

/// Scores every producer in `cohort` on every series in `actuals`, ranks the
/// cohort within each series and averages over the corpus. Only producers for
/// which `listed` is true (all when empty) appear on the leaderboard. The
/// benchmark must belong to the cohort.
/// Throws DataError for a missing or misaligned forecast.
CohortResult evaluate_cohort(const ForecastIndex& forecasts, const ActualIndex& actuals,
                             std::vector<std::string> cohort, const std::vector<std::string>& listed = {},
                             std::string_view benchmark = kBenchmarkProducer, int jobs = 1);

struct CorpusEvaluation {
	CohortResult individual;              // non-ensemble producers ranked among themselves
	std::optional<CohortResult> ensemble; // ensembles ranked among ensembles + individuals
};

/// Splits the producers of `forecasts` into individual models and ensemble
/// labels and evaluates both cohorts. The ensemble leaderboard lists
/// ensembles only.
CorpusEvaluation evaluate_corpus(const ForecastIndex& forecasts, const ActualIndex& actuals, int jobs = 1);

bool is_ensemble_producer(std::string_view producer);

/// phi values for the weighted combinations from an individual leaderboard.
/// Throws DataError if one of the eight public models is absent.
ensemble::PhiTable phi_from_leaderboard(const Leaderboard& individual);

/// Per-series phi computed from every other series of the corpus.
std::map<std::string, ensemble::PhiTable> leave_one_out_phi(const CohortResult& individual);

} // namespace pqf::evaluation
