#include "pqforecast/core/errors.hpp"
#include "pqforecast/evaluation/corpus.hpp"
#include "pqforecast/io/config.hpp"
#include "pqforecast/io/csv.hpp"
#include "pqforecast/io/forecast_csv.hpp"
#include "pqforecast/io/leaderboard_csv.hpp"
#include "pqforecast/io/pipeline.hpp"
#include "pqforecast/io/raw_csv.hpp"
#include "pqforecast/io/synth.hpp"
#include "pqforecast/io/weekly_csv.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fmt/format.h>
#include <iostream>
#include <map>

namespace fs = std::filesystem;
using namespace pqf;

namespace {

struct Options {
	std::string config_path;
	std::string out_dir = ".";
	int jobs = 0;
	std::optional<std::uint64_t> seed;

	std::vector<std::string> inputs;
	std::string planning_path;
	std::string weekly_path;
	std::string models;
	std::string methods;
	std::vector<std::string> forecast_paths;
	std::string leaderboard_path;
	bool loo_weights = false;
	int top_n = 0;
	bool svg = false;
	std::string report_dir;

	int n_series = 200;
	int weeks = 157;
	std::string mode = "weekly";
	double missing_rate = 0.0;
	double outlier_rate = 0.01;
	double noise_min = 1.0;
	double noise_max = 4.0;
	double max_trend = 0.05;
	double amp_min = 2.0;
	double amp_max = 15.0;
	double sinusoid_fraction = 0.5;
};

io::RunConfig make_config(const Options& opt) {
	io::RunConfig cfg;
	if (!opt.config_path.empty()) {
		io::merge_config(opt.config_path, cfg);
	}
	if (opt.jobs > 0) {
		cfg.jobs = opt.jobs;
	}
	if (opt.seed) {
		cfg.seed = *opt.seed;
	}
	if (!opt.models.empty()) {
		cfg.models = io::parse_model_list(opt.models);
	}
	if (!opt.methods.empty()) {
		cfg.methods = io::parse_method_list(opt.methods);
	}
	if (opt.loo_weights) {
		cfg.loo_weights = true;
	}
	if (opt.top_n > 0) {
		cfg.top_n = opt.top_n;
	}
	return cfg;
}

fs::path out_path(const Options& opt, const std::string& name) {
	fs::create_directories(opt.out_dir);
	return fs::path(opt.out_dir) / name;
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
	std::vector<std::string> files;
	for (const auto& in : inputs) {
		if (fs::is_directory(in)) {
			std::vector<std::string> found;
			for (const auto& e : fs::directory_iterator(in)) {
				if (e.is_regular_file() && e.path().extension() == ".csv") {
					found.push_back(e.path().string());
				}
			}
			std::sort(found.begin(), found.end());
			files.insert(files.end(), found.begin(), found.end());
		} else if (fs::exists(in)) {
			files.push_back(in);
		} else {
			throw DataError("input not found: " + in);
		}
	}
	if (files.empty()) {
		throw DataError("no data");
	}
	return files;
}

std::string header_of(const std::string& path) {
	return io::read_header_line(path);
}

std::string join(const std::vector<std::string>& v) {
	std::string out;
	for (const auto& s : v) {
		out += (out.empty() ? "" : ",") + s;
	}
	return out;
}

void cmd_preprocess(const Options& opt) {
	auto cfg = make_config(opt);
	if (!opt.planning_path.empty()) {
		auto extra = io::load_planning_levels(opt.planning_path);
		cfg.planning_levels.insert(cfg.planning_levels.end(), extra.begin(), extra.end());
	}
	const auto files = expand_inputs(opt.inputs);
	std::map<std::string, core::RawSeries> raw;
	std::map<std::string, std::vector<io::WeeklyRow>> weekly;
	for (const auto& f : files) {
		const auto header = header_of(f);
		if (header == join(io::kRawHeader)) {
			for (auto& s : io::read_raw_csv(f)) {
				auto& dst = raw[s.series_id];
				dst.series_id = s.series_id;
				dst.samples.insert(dst.samples.end(), s.samples.begin(), s.samples.end());
			}
		} else if (header == join(io::kWeeklyHeader)) {
			for (auto& [id, rows] : io::read_weekly_rows(f)) {
				if (weekly.contains(id)) {
					throw DataError("series " + id + " appears in more than one weekly file");
				}
				weekly[id] = std::move(rows);
			}
		} else {
			throw DataError(f + ":1: unrecognized header '" + header + "'");
		}
	}
	io::PreprocessResult result;
	const int required = cfg.train_len + cfg.horizon;
	if (!raw.empty()) {
		std::vector<core::RawSeries> list;
		for (auto& [id, s] : raw) {
			std::stable_sort(s.samples.begin(), s.samples.end(),
			                 [](const auto& a, const auto& b) { return a.time < b.time; });
			list.push_back(std::move(s));
		}
		result = io::preprocess_raw(list, cfg.planning_levels, required, cfg.jobs);
	}
	if (!weekly.empty()) {
		for (const auto& [id, _] : weekly) {
			if (raw.contains(id)) {
				throw DataError("series " + id + " appears in both raw and weekly input");
			}
		}
		auto w = io::preprocess_weekly(weekly, required);
		result.accepted.insert(result.accepted.end(), w.accepted.begin(), w.accepted.end());
		result.rejected.insert(result.rejected.end(), w.rejected.begin(), w.rejected.end());
		result.manifest.insert(result.manifest.end(), w.manifest.begin(), w.manifest.end());
		std::sort(result.accepted.begin(), result.accepted.end(),
		          [](const auto& a, const auto& b) { return a.series_id < b.series_id; });
		std::sort(result.rejected.begin(), result.rejected.end(),
		          [](const auto& a, const auto& b) { return a.series_id < b.series_id; });
	}
	io::write_weekly_csv(out_path(opt, "weekly.csv").string(), result.accepted);
	io::write_rejection_csv(out_path(opt, "rejections.csv").string(), result.rejected);
	io::write_manifest(out_path(opt, "preprocess_manifest.jsonl").string(), result.manifest);
	fmt::print("accepted {} series, rejected {}\n", result.accepted.size(), result.rejected.size());
	for (const auto& r : result.rejected) {
		fmt::print("  rejected {}: {}\n", r.series_id, r.reason);
	}
}

void cmd_forecast(const Options& opt) {
	const auto cfg = make_config(opt);
	const auto series = io::read_weekly_csv(opt.weekly_path);
	const auto run = io::run_forecasts(series, cfg);
	io::write_forecast_csv(out_path(opt, "forecasts.csv").string(), run.forecasts);
	io::write_manifest(out_path(opt, "forecast_manifest.jsonl").string(), run.manifest);
	fmt::print("{} series x {} models -> {} forecasts, {} warnings\n", series.size(), cfg.models.size(),
	           run.forecasts.size(), run.manifest.size());
	fmt::print("wall time per model:\n");
	for (auto id : cfg.models) {
		fmt::print("  {:<10} {:8.3f} s\n", models::name(id), run.seconds.at(id));
	}
}

void cmd_ensemble(const Options& opt) {
	const auto cfg = make_config(opt);
	evaluation::ForecastIndex individual;
	for (const auto& p : opt.forecast_paths) {
		io::read_forecast_csv(p, individual);
	}
	const bool weighted = std::any_of(cfg.methods.begin(), cfg.methods.end(), ensemble::is_weighted);
	io::PhiSource source;
	ensemble::PhiTable global;
	std::map<std::string, ensemble::PhiTable> loo;
	if (weighted && cfg.loo_weights) {
		if (opt.weekly_path.empty()) {
			throw ConfigError("leave-one-out weights need --weekly");
		}
		const auto series = io::read_weekly_csv(opt.weekly_path);
		const auto actuals = io::actuals_from(series, cfg);
		std::vector<std::string> cohort;
		for (auto id : models::kPublicModels) {
			cohort.emplace_back(models::name(id));
		}
		const auto eval = evaluation::evaluate_cohort(individual, actuals, cohort, {}, evaluation::kBenchmarkProducer,
		                                              cfg.jobs);
		loo = evaluation::leave_one_out_phi(eval);
		source.per_series = &loo;
	} else if (weighted) {
		if (opt.leaderboard_path.empty()) {
			throw ConfigError("weighted methods (smape, rank) need --leaderboard");
		}
		global = evaluation::phi_from_leaderboard(io::read_leaderboard_csv(opt.leaderboard_path));
		source.global = &global;
	}
	const auto run = io::run_ensembles(individual, cfg, source);
	io::write_forecast_csv(out_path(opt, "ensemble_forecasts.csv").string(), run.forecasts);
	io::write_manifest(out_path(opt, "ensemble_manifest.jsonl").string(), run.manifest);
	fmt::print("{} ensemble forecasts ({} methods)\n", run.forecasts.size(), cfg.methods.size());
}

void cmd_evaluate(const Options& opt) {
	const auto cfg = make_config(opt);
	evaluation::ForecastIndex forecasts;
	for (const auto& p : opt.forecast_paths) {
		io::read_forecast_csv(p, forecasts);
	}
	const auto series = io::read_weekly_csv(opt.weekly_path);
	const auto run = io::run_evaluation(forecasts, io::actuals_from(series, cfg), cfg);
	fs::create_directories(opt.out_dir);
	io::write_evaluation(opt.out_dir, run, cfg);
	for (const auto& m : run.manifest) {
		fmt::print(stderr, "warning: {}\n", m.message);
	}
	fmt::print("{}", io::summarize(run));
	if (opt.svg) {
		io::write_report(opt.out_dir);
	}
}

void cmd_synth(const Options& opt) {
	const auto cfg = make_config(opt);
	io::SyntheticSpec spec;
	spec.n_series = opt.n_series;
	spec.length_weeks = opt.weeks;
	spec.seed = cfg.seed;
	spec.missing_rate = opt.missing_rate;
	spec.outlier_rate = opt.outlier_rate;
	spec.noise_sd = {opt.noise_min, opt.noise_max};
	spec.max_trend_slope = opt.max_trend;
	spec.seasonal_amplitude = {opt.amp_min, opt.amp_max};
	spec.sinusoid_fraction = opt.sinusoid_fraction;
	spec.period = cfg.fit.seasonal_period;
	io::SyntheticCorpus corpus;
	try {
		corpus = io::generate_corpus(spec);
	} catch (const std::invalid_argument& e) {
		throw ConfigError(e.what());
	}
	if (opt.mode == "raw") {
		io::write_synthetic_raw(out_path(opt, "synthetic_raw.csv").string(), corpus, spec.seed);
		io::write_synthetic_planning_levels(out_path(opt, "planning_levels.ini").string(), corpus);
	} else {
		io::write_synthetic_weekly(out_path(opt, "synthetic_weekly.csv").string(), corpus);
	}
	io::write_ground_truth(out_path(opt, "ground_truth").string(), corpus);
	fmt::print("generated {} series of {} weeks ({} mode, seed {})\n", spec.n_series, spec.length_weeks, opt.mode,
	           spec.seed);
}

void cmd_report(const Options& opt) {
	const auto dir = opt.report_dir.empty() ? opt.out_dir : opt.report_dir;
	fmt::print("{}", io::write_report(dir));
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Weekly power-quality utilization forecasting and ensemble evaluation"};
	app.require_subcommand(1);
	Options opt;
	app.add_option("--config", opt.config_path, "INI configuration file")->check(CLI::ExistingFile);
	app.add_option("--out", opt.out_dir, "output directory");
	app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
	app.add_option("--seed", opt.seed, "random seed for synthetic data");

	auto* pre = app.add_subcommand("preprocess", "raw or weekly CSV -> gap-filled weekly utilization");
	pre->add_option("--input", opt.inputs, "raw/weekly CSV files or directories")->required();
	pre->add_option("--planning", opt.planning_path, "INI file with planning levels")->check(CLI::ExistingFile);

	auto* fc = app.add_subcommand("forecast", "fit the models and forecast the test horizon");
	fc->add_option("--weekly", opt.weekly_path, "weekly CSV")->required()->check(CLI::ExistingFile);
	fc->add_option("--models", opt.models, "comma-separated model names");

	auto* ens = app.add_subcommand("ensemble", "combine individual forecasts into ensembles");
	ens->add_option("--forecasts", opt.forecast_paths, "individual forecast CSV files")->required();
	ens->add_option("--leaderboard", opt.leaderboard_path, "individual leaderboard CSV (weighted methods)");
	ens->add_option("--methods", opt.methods, "comma-separated methods: mean, median, smape, rank");
	ens->add_flag("--loo-weights", opt.loo_weights, "weights from all other series (needs --weekly)");
	ens->add_option("--weekly", opt.weekly_path, "weekly CSV (leave-one-out weights)");

	auto* ev = app.add_subcommand("evaluate", "score forecasts against the test horizon");
	ev->add_option("--forecasts", opt.forecast_paths, "forecast CSV files")->required();
	ev->add_option("--weekly", opt.weekly_path, "weekly CSV")->required()->check(CLI::ExistingFile);
	ev->add_option("--top-n", opt.top_n, "ensembles in the composition analysis")->check(CLI::PositiveNumber);
	ev->add_flag("--svg", opt.svg, "also write the report and SVG figures");

	auto* sy = app.add_subcommand("synth", "generate a synthetic corpus");
	sy->add_option("--n-series", opt.n_series, "number of series");
	sy->add_option("--weeks", opt.weeks, "length in weeks");
	sy->add_option("--mode", opt.mode, "raw or weekly")->check(CLI::IsMember({"raw", "weekly"}));
	sy->add_option("--missing-rate", opt.missing_rate, "probability of a missing week");
	sy->add_option("--outlier-rate", opt.outlier_rate, "probability of an outlier week");
	sy->add_option("--noise-min", opt.noise_min, "lower bound of the noise sd");
	sy->add_option("--noise-max", opt.noise_max, "upper bound of the noise sd");
	sy->add_option("--max-trend", opt.max_trend, "largest absolute trend slope per week");
	sy->add_option("--amp-min", opt.amp_min, "lower bound of the seasonal amplitude");
	sy->add_option("--amp-max", opt.amp_max, "upper bound of the seasonal amplitude");
	sy->add_option("--sinusoid-fraction", opt.sinusoid_fraction, "share of sinusoidal seasonal shapes");

	auto* rep = app.add_subcommand("report", "text summary and SVG figures from evaluate output");
	rep->add_option("--dir", opt.report_dir, "evaluate output directory (default: --out)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}

	try {
		if (*pre) {
			cmd_preprocess(opt);
		} else if (*fc) {
			cmd_forecast(opt);
		} else if (*ens) {
			cmd_ensemble(opt);
		} else if (*ev) {
			cmd_evaluate(opt);
		} else if (*sy) {
			cmd_synth(opt);
		} else if (*rep) {
			cmd_report(opt);
		}
	} catch (const ConfigError& e) {
		fmt::print(stderr, "error: {}\n", e.what());
		return 1;
	} catch (const DataError& e) {
		fmt::print(stderr, "error: {}\n", e.what());
		return 2;
	} catch (const std::exception& e) {
		fmt::print(stderr, "internal error: {}\n", e.what());
		return 3;
	}
	return 0;
}
