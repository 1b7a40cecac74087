#include "pqforecast/io/pipeline.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/core/parallel.hpp"
#include "pqforecast/io/csv.hpp"
#include "pqforecast/io/leaderboard_csv.hpp"
#include "pqforecast/io/svg.hpp"
#include "pqforecast/models/registry.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <set>

namespace pqf::io {

namespace fs = std::filesystem;

namespace {

struct SeriesOutcome {
	std::optional<core::WeeklySeries> accepted;
	std::optional<Rejection> rejected;
};

SeriesOutcome finish_series(const std::string& id, std::vector<core::WeeklyAggregate> aggregates, int required_weeks) {
	SeriesOutcome out;
	const int total = static_cast<int>(aggregates.size());
	if (required_weeks > 0) {
		if (total < required_weeks) {
			const int absent = static_cast<int>(
			    std::count_if(aggregates.begin(), aggregates.end(), [](const auto& a) { return !a.p95; }));
			out.rejected = Rejection{id, "insufficient-history", absent, total};
			return out;
		}
		aggregates.resize(static_cast<std::size_t>(required_weeks));
	}
	auto filled = core::fill_gaps(id, aggregates);
	if (auto* rej = std::get_if<core::GapRejection>(&filled)) {
		out.rejected = Rejection{id, core::to_string(rej->reason), rej->absent_weeks, rej->total_weeks};
	} else {
		out.accepted = std::move(std::get<core::WeeklySeries>(filled));
	}
	return out;
}

PreprocessResult collect(std::vector<SeriesOutcome> outcomes) {
	PreprocessResult result;
	for (auto& o : outcomes) {
		if (o.accepted) {
			result.accepted.push_back(std::move(*o.accepted));
		} else {
			const auto& r = *o.rejected;
			result.manifest.push_back({"preprocess", r.series_id, "", "rejected",
			                           fmt::format("{} ({} of {} weeks absent)", r.reason, r.absent_weeks,
			                                       r.total_weeks)});
			result.rejected.push_back(std::move(*o.rejected));
		}
	}
	for (const auto& s : result.accepted) {
		const auto n_filled = std::count(s.filled.begin(), s.filled.end(), true);
		if (n_filled > 0) {
			result.manifest.push_back(
			    {"preprocess", s.series_id, "", "filled", fmt::format("{} of {} weeks carried forward", n_filled, s.size())});
		}
	}
	return result;
}

std::string format_leaderboard(const evaluation::Leaderboard& board, std::size_t max_rows) {
	std::string out = fmt::format("{:>5}  {:<24} {:>10} {:>11} {:>10} {:>8}\n", "rank", "producer", "mean_mae",
	                              "mean_smape", "mean_rank", "BR");
	for (std::size_t i = 0; i < board.rows.size() && i < max_rows; ++i) {
		const auto& r = board.rows[i];
		out += fmt::format("{:>5}  {:<24} {:>10.4f} {:>11.4f} {:>10.3f} {:>8.3f}\n", r.rank, r.producer, r.mean_mae,
		                   r.mean_smape, r.mean_rank, r.benchmark_ratio);
	}
	if (board.rows.size() > max_rows) {
		out += fmt::format("  ... {} more\n", board.rows.size() - max_rows);
	}
	return out;
}

std::string format_comparison(const evaluation::ComparisonReport& c) {
	return fmt::format("best individual {} vs best ensemble {}: ensemble wins on {} of {} series ({:.1f} %), "
	                   "median improvement when winning {:.2f} %, overall median {:.2f} %\n",
	                   c.individual_producer, c.ensemble_producer, c.wins, c.points.size(), 100.0 * c.win_fraction,
	                   c.median_improvement_given_win, c.median_improvement);
}

evaluation::Leaderboard maybe_read_leaderboard(const fs::path& p) {
	return fs::exists(p) ? read_leaderboard_csv(p.string()) : evaluation::Leaderboard{};
}

} // namespace

PreprocessResult preprocess_raw(std::span<const core::RawSeries> raw, const std::vector<core::PlanningLevel>& levels,
                                int required_weeks, int jobs) {
	if (raw.empty()) {
		throw DataError("no data");
	}
	std::vector<const core::PlanningLevel*> level_of;
	for (const auto& s : raw) {
		level_of.push_back(&planning_level_for(levels, s.series_id));
	}
	std::vector<SeriesOutcome> outcomes(raw.size());
	core::parallel_for(raw.size(), jobs, [&](std::size_t i) {
		const auto& s = raw[i];
		std::vector<core::WeeklyAggregate> aggregates;
		try {
			aggregates = core::aggregate_weekly(s);
		} catch (const DataError& e) {
			throw DataError(s.series_id + ": " + e.what());
		}
		auto outcome = finish_series(s.series_id, std::move(aggregates), required_weeks);
		if (outcome.accepted) {
			outcome.accepted = core::normalize(*outcome.accepted, *level_of[i]);
		}
		outcomes[i] = std::move(outcome);
	});
	return collect(std::move(outcomes));
}

PreprocessResult preprocess_weekly(const std::map<std::string, std::vector<WeeklyRow>>& rows, int required_weeks) {
	if (rows.empty()) {
		throw DataError("no data");
	}
	std::vector<SeriesOutcome> outcomes;
	for (const auto& [id, r] : rows) {
		outcomes.push_back(finish_series(id, rows_to_aggregates(r), required_weeks));
	}
	return collect(std::move(outcomes));
}

ForecastRun run_forecasts(std::span<const core::WeeklySeries> series, const RunConfig& config) {
	if (series.empty()) {
		throw DataError("no data");
	}
	const std::size_t nm = config.models.size();
	std::vector<models::Forecast> forecasts(series.size() * nm);
	std::vector<std::vector<ManifestEntry>> notes(series.size());
	std::vector<std::vector<double>> seconds(series.size(), std::vector<double>(nm, 0.0));
	core::parallel_for(series.size(), config.jobs, [&](std::size_t s) {
		const auto split = core::split_train_test(series[s], config.train_len, config.horizon);
		const auto& id = series[s].series_id;
		for (std::size_t m = 0; m < nm; ++m) {
			std::vector<std::string> warnings;
			const auto t0 = std::chrono::steady_clock::now();
			forecasts[s * nm + m] =
			    models::forecast_model(id, config.models[m], split.train, config.fit, config.horizon, warnings);
			seconds[s][m] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
			for (auto& w : warnings) {
				const bool fallback = w.find("fell back") != std::string::npos;
				notes[s].push_back({"forecast", id, std::string(models::name(config.models[m])),
				                    fallback ? "fallback" : "warning", std::move(w)});
			}
		}
	});
	ForecastRun run;
	run.forecasts = std::move(forecasts);
	for (std::size_t s = 0; s < series.size(); ++s) {
		for (auto& n : notes[s]) {
			run.manifest.push_back(std::move(n));
		}
		for (std::size_t m = 0; m < nm; ++m) {
			run.seconds[config.models[m]] += seconds[s][m];
		}
	}
	return run;
}

EnsembleRun run_ensembles(const evaluation::ForecastIndex& individual, const RunConfig& config, PhiSource phi) {
	const bool weighted = std::any_of(config.methods.begin(), config.methods.end(), ensemble::is_weighted);
	if (weighted && phi.global == nullptr && phi.per_series == nullptr) {
		throw ConfigError("weighted combination methods need an individual leaderboard");
	}
	std::set<std::string> series_set;
	for (const auto& [producer, by_series] : individual) {
		for (const auto& [sid, _] : by_series) {
			series_set.insert(sid);
		}
	}
	if (series_set.empty()) {
		throw DataError("no data");
	}
	const std::vector<std::string> series(series_set.begin(), series_set.end());

	std::array<const std::map<std::string, std::vector<double>>*, 8> columns{};
	for (std::size_t k = 0; k < 8; ++k) {
		const auto model = std::string(models::name(models::kPublicModels[k]));
		auto it = individual.find(model);
		if (it == individual.end()) {
			throw DataError("missing forecast for series " + series.front() + ", producer " + model);
		}
		columns[k] = &it->second;
	}
	for (const auto& sid : series) {
		for (std::size_t k = 0; k < 8; ++k) {
			if (!columns[k]->contains(sid)) {
				throw DataError("missing forecast for series " + sid + ", producer " +
				                std::string(models::name(models::kPublicModels[k])));
			}
		}
	}

	std::vector<std::vector<models::Forecast>> per_series(series.size());
	core::parallel_for(series.size(), config.jobs, [&](std::size_t s) {
		const auto& sid = series[s];
		std::vector<models::Forecast> members;
		for (std::size_t k = 0; k < 8; ++k) {
			members.push_back({sid, std::string(models::name(models::kPublicModels[k])), columns[k]->at(sid)});
		}
		const ensemble::PhiTable* table = phi.global;
		if (phi.per_series != nullptr) {
			auto it = phi.per_series->find(sid);
			if (it == phi.per_series->end()) {
				throw DataError("no leave-one-out weights for series " + sid);
			}
			table = &it->second;
		}
		per_series[s] = ensemble::build_ensembles(members, config.methods, weighted ? table : nullptr);
	});
	EnsembleRun run;
	run.forecasts.reserve(series.size() * ensemble::enumerate_ensembles().size() * config.methods.size());
	for (auto& v : per_series) {
		std::move(v.begin(), v.end(), std::back_inserter(run.forecasts));
	}
	return run;
}

evaluation::ActualIndex actuals_from(std::span<const core::WeeklySeries> series, const RunConfig& config) {
	evaluation::ActualIndex actuals;
	for (const auto& s : series) {
		actuals[s.series_id] = core::split_train_test(s, config.train_len, config.horizon).test;
	}
	return actuals;
}

EvaluationRun run_evaluation(const evaluation::ForecastIndex& forecasts, const evaluation::ActualIndex& actuals,
                             const RunConfig& config) {
	EvaluationRun run;
	run.corpus = evaluation::evaluate_corpus(forecasts, actuals, config.jobs);
	if (run.corpus.ensemble) {
		const auto& board = run.corpus.ensemble->leaderboard;
		run.composition = evaluation::composition_analysis(board, config.top_n);
		for (const auto& w : run.composition->warnings) {
			run.manifest.push_back({"evaluate", "", "", "warning", w});
		}
		run.size_aggregates["all"] = evaluation::size_aggregates(board);
		for (auto method : ensemble::kAllMethods) {
			auto groups = evaluation::size_aggregates(board, method);
			if (!groups.empty()) {
				run.size_aggregates[std::string(ensemble::name(method))] = std::move(groups);
			}
		}
		run.comparison = evaluation::compare_leaders(run.corpus);
	}
	return run;
}

void write_evaluation(const std::string& dir, const EvaluationRun& run, const RunConfig& config) {
	const fs::path d(dir);
	fs::create_directories(d);
	write_leaderboard_csv((d / "leaderboard_individual.csv").string(), run.corpus.individual.leaderboard);
	write_records_csv((d / "records_individual.csv").string(), run.corpus.individual.records);
	if (run.corpus.ensemble) {
		write_leaderboard_csv((d / "leaderboard_ensemble.csv").string(), run.corpus.ensemble->leaderboard);
	}
	if (run.composition) {
		write_composition_csvs((d / fmt::format("composition_top{}", config.top_n)).string(), *run.composition);
	}
	for (const auto& [key, groups] : run.size_aggregates) {
		const auto name = key == "all" ? std::string("size_aggregates.csv") : "size_aggregates_" + key + ".csv";
		write_size_aggregates_csv((d / name).string(), groups);
	}
	if (run.comparison) {
		write_comparison_csv((d / "comparison.csv").string(), *run.comparison);
		write_ecdf_csv((d / "comparison_ecdf.csv").string(), *run.comparison);
	}
	write_manifest((d / "evaluate_manifest.jsonl").string(), run.manifest);
}

std::string summarize(const EvaluationRun& run) {
	std::string out = "Individual models\n" + format_leaderboard(run.corpus.individual.leaderboard, 50);
	if (run.corpus.ensemble) {
		const auto& board = run.corpus.ensemble->leaderboard;
		out += "\nEnsembles\n" + format_leaderboard(board, 10);
		const auto& best_ind = run.corpus.individual.leaderboard.rows.front();
		out += fmt::format("\n{} of {} ensembles beat the best individual model ({}, mean sMAPE {:.4f})\n",
		                   evaluation::count_better_than(board, best_ind.mean_smape), board.rows.size(),
		                   best_ind.producer, best_ind.mean_smape);
	}
	if (run.comparison) {
		out += format_comparison(*run.comparison);
	}
	return out;
}

std::string write_report(const std::string& dir) {
	const fs::path d(dir);
	const auto individual = maybe_read_leaderboard(d / "leaderboard_individual.csv");
	if (individual.rows.empty()) {
		throw DataError("no evaluation results in " + dir);
	}
	const auto ensembles = maybe_read_leaderboard(d / "leaderboard_ensemble.csv");
	std::string text = "Individual models\n" + format_leaderboard(individual, 50);
	if (!ensembles.rows.empty()) {
		text += "\nEnsembles\n" + format_leaderboard(ensembles, 20);
		const auto& best = individual.rows.front();
		text += fmt::format("\n{} of {} ensembles beat the best individual model ({}, mean sMAPE {:.4f})\n",
		                    evaluation::count_better_than(ensembles, best.mean_smape), ensembles.rows.size(),
		                    best.producer, best.mean_smape);
	}

	std::vector<std::pair<std::string, double>> bars;
	for (const auto& r : individual.rows) {
		bars.emplace_back(r.producer, r.mean_smape);
	}
	write_text_file((d / "fig_individual_smape.svg").string(),
	                svg_bar_chart({"Mean sMAPE of individual models", "model", "mean sMAPE (%)"}, bars));

	if (fs::exists(d / "size_aggregates.csv")) {
		const auto table = read_csv_table((d / "size_aggregates.csv").string());
		std::vector<BoxItem> items;
		for (const auto& row : table.rows) {
			auto num = [&](std::string_view col) { return std::stod(row[table.column(col)]); };
			items.push_back({row[table.column("size")], num("min"), num("p25"), num("mean"), num("p75"), num("max")});
		}
		write_text_file((d / "fig_size_smape.svg").string(),
		                svg_box_chart({"Ensemble sMAPE by ensemble size", "ensemble size", "mean sMAPE (%)"}, items));
	}

	for (const auto& entry : fs::directory_iterator(d)) {
		const auto name = entry.path().filename().string();
		if (name.rfind("composition_top", 0) != 0 || entry.path().extension() != ".csv") {
			continue;
		}
		const auto table = read_csv_table(entry.path().string());
		std::vector<std::pair<std::string, double>> comp;
		std::string value_col;
		if (name.ends_with("_models.csv")) {
			value_col = "share";
		} else if (name.ends_with("_sizes.csv") || name.ends_with("_methods.csv")) {
			value_col = "count";
		} else {
			continue;
		}
		for (const auto& row : table.rows) {
			comp.emplace_back(row[0], std::stod(row[table.column(value_col)]));
		}
		const auto stem = entry.path().stem().string();
		write_text_file((d / ("fig_" + stem + ".svg")).string(),
		                svg_bar_chart({stem, table.header[0], value_col}, comp));
	}

	if (fs::exists(d / "comparison.csv")) {
		const auto table = read_csv_table((d / "comparison.csv").string());
		std::vector<evaluation::EvalRecord> ind, ens;
		std::vector<std::pair<double, double>> scatter;
		for (const auto& row : table.rows) {
			const double a = std::stod(row[table.column("individual_smape")]);
			const double b = std::stod(row[table.column("ensemble_smape")]);
			ind.push_back({row[0], "best individual", 0.0, a, 1.0});
			ens.push_back({row[0], "best ensemble", 0.0, b, 1.0});
			scatter.emplace_back(a, b);
		}
		if (!ind.empty()) {
			auto cmp = evaluation::compare_best(ind, ens);
			if (!individual.rows.empty() && !ensembles.rows.empty()) {
				cmp.individual_producer = individual.rows.front().producer;
				cmp.ensemble_producer = ensembles.rows.front().producer;
			}
			text += format_comparison(cmp);
			LineSeries ecdf{"ECDF", {}};
			for (const auto& pt : cmp.ecdf) {
				ecdf.points.push_back(pt);
			}
			write_text_file((d / "fig_comparison_ecdf.svg").string(),
			                svg_line_chart({"Relative sMAPE improvement of the best ensemble", "improvement (%)",
			                                "cumulative fraction of series"},
			                               {ecdf}));
			write_text_file((d / "fig_comparison_scatter.svg").string(),
			                svg_scatter({"Per-series sMAPE", "best individual sMAPE (%)", "best ensemble sMAPE (%)"},
			                            scatter, true));
		}
	}
	write_text_file((d / "report.txt").string(), text);
	return text;
}

} // namespace pqf::io
