#pragma once

#include "pqforecast/core/preprocess.hpp"
#include "pqforecast/evaluation/analysis.hpp"
#include "pqforecast/io/config.hpp"
#include "pqforecast/io/manifest.hpp"
#include "pqforecast/io/weekly_csv.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pqf::io {

struct PreprocessResult {
	std::vector<core::WeeklySeries> accepted;
	std::vector<Rejection> rejected;
	std::vector<ManifestEntry> manifest;
};

/// Aggregates, truncates to the first `required_weeks` weeks, fills gaps and
/// normalizes every raw series. Series with fewer weeks are rejected as
/// "insufficient-history". A missing planning level throws ConfigError
/// before any series is processed.
PreprocessResult preprocess_raw(std::span<const core::RawSeries> raw, const std::vector<core::PlanningLevel>& levels,
                                int required_weeks, int jobs = 1);

/// Same for weekly utilization rows, where missing rows are absent weeks.
PreprocessResult preprocess_weekly(const std::map<std::string, std::vector<WeeklyRow>>& rows, int required_weeks);

struct ForecastRun {
	std::vector<models::Forecast> forecasts; // by series, then model in configured order
	std::vector<ManifestEntry> manifest;
	std::map<models::ModelId, double> seconds; // summed wall time per model
};

/// Fits every configured model on the training window of every series.
/// Throws DataError when a series is shorter than train_len + horizon.
ForecastRun run_forecasts(std::span<const core::WeeklySeries> series, const RunConfig& config);

/// Where the weighted methods take their phi values from.
struct PhiSource {
	const ensemble::PhiTable* global = nullptr;
	const std::map<std::string, ensemble::PhiTable>* per_series = nullptr;
};

struct EnsembleRun {
	std::vector<models::Forecast> forecasts; // by series, then ensemble, then method
	std::vector<ManifestEntry> manifest;
};

/// All ensembles for the configured methods. Throws DataError naming the
/// first missing member forecast and ConfigError when a weighted method has
/// no phi source.
EnsembleRun run_ensembles(const evaluation::ForecastIndex& individual, const RunConfig& config, PhiSource phi);

/// Test windows of the series.
evaluation::ActualIndex actuals_from(std::span<const core::WeeklySeries> series, const RunConfig& config);

struct EvaluationRun {
	evaluation::CorpusEvaluation corpus;
	std::optional<evaluation::CompositionReport> composition;
	std::optional<evaluation::ComparisonReport> comparison;
	std::map<std::string, std::vector<evaluation::GroupAggregate>> size_aggregates; // "all" or method name
	std::vector<ManifestEntry> manifest;
};

EvaluationRun run_evaluation(const evaluation::ForecastIndex& forecasts, const evaluation::ActualIndex& actuals,
                             const RunConfig& config);

/// Writes leaderboards, records and analysis CSVs into `dir`.
void write_evaluation(const std::string& dir, const EvaluationRun& run, const RunConfig& config);

/// Reads the CSVs written by write_evaluation and writes `report.txt` and the
/// SVG figures into `dir`. Returns the text summary.
std::string write_report(const std::string& dir);

/// Plain-text overview of an evaluation.
std::string summarize(const EvaluationRun& run);

} // namespace pqf::io
