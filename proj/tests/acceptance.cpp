// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "pqforecast/core/preprocess.hpp"
#include "pqforecast/ensemble/combination.hpp"
#include "pqforecast/ensemble/ensemble_id.hpp"
#include "pqforecast/evaluation/analysis.hpp"
#include "pqforecast/evaluation/metrics.hpp"
#include "pqforecast/io/forecast_csv.hpp"
#include "pqforecast/io/leaderboard_csv.hpp"
#include "pqforecast/io/pipeline.hpp"
#include "pqforecast/io/synth.hpp"
#include "pqforecast/io/weekly_csv.hpp"
#include "pqforecast/models/baseline.hpp"
#include "pqforecast/models/exponential_smoothing.hpp"
#include "pqforecast/models/registry.hpp"
#include "pqforecast/models/sarima.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fmt/core.h>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <unistd.h>

using namespace pqf;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
	fmt::print("{} {} {}: {}\n", ok ? "PASS" : "FAIL", id, title, detail);
	std::fflush(stdout);
	if (!ok) {
		++failures;
	}
}

double seconds_since(Clock::time_point t0) {
	return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const fs::path& path) {
	std::ifstream in(path, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

// 1 ---------------------------------------------------------------------

void enumeration() {
	const auto t0 = Clock::now();
	const auto& all = ensemble::enumerate_ensembles();
	std::map<char, int> count;
	for (const auto& e : all) {
		++count[e.letter];
	}
	std::vector<models::Forecast> members;
	for (auto m : models::kPublicModels) {
		members.push_back({"S", std::string(models::name(m)), std::vector<double>(52, 1.0)});
	}
	ensemble::PhiTable phi;
	phi.mean_smape.fill(1.0);
	phi.mean_rank.fill(1.0);
	const auto sweep = ensemble::build_ensembles(members, ensemble::kAllMethods, &phi);
	std::vector<std::string> labels;
	for (const auto& f : sweep) {
		labels.push_back(f.producer);
	}
	std::sort(labels.begin(), labels.end());
	const bool distinct = std::adjacent_find(labels.begin(), labels.end()) == labels.end();
	const double secs = seconds_since(t0);

	const std::vector<int> want{28, 56, 70, 56, 28, 8, 1};
	bool sizes = true;
	std::string got;
	for (int k = 2; k <= 8; ++k) {
		const int c = count[static_cast<char>('A' + k - 1)];
		sizes = sizes && c == want[static_cast<std::size_t>(k - 2)];
		got += (k > 2 ? "/" : "") + std::to_string(c);
	}
	const bool ok = all.size() == 247 && sizes && sweep.size() == 988 && distinct && secs < 1.0;
	report(1, "enumeration", ok,
	       fmt::format("{} configurations, sizes {}, {} distinct ensemble producers, {:.3f} s", all.size(), got,
	                   sweep.size(), secs));
}

// 2 ---------------------------------------------------------------------

void paper_formulas() {
	const double br1 = evaluation::benchmark_ratio(18.22, 20.88);
	const double br2 = evaluation::benchmark_ratio(17.68, 20.88);
	const double s0 = evaluation::smape(std::vector<double>{42.0}, std::vector<double>{42.0});
	const double s200 = evaluation::smape(std::vector<double>{0.0}, std::vector<double>{5.0});
	const double s66 = evaluation::smape(std::vector<double>{100.0}, std::vector<double>{50.0});
	const bool ok = std::abs(br1 - 0.873) <= 0.0005 && std::abs(br2 - 0.847) <= 0.0005 && s0 == 0.0 &&
	                s200 == 200.0 && std::round(s66 * 1000.0) / 1000.0 == 66.667 &&
	                std::abs(s66 - 200.0 / 3.0) <= 1e-12;
	report(2, "benchmark ratio and sMAPE arithmetic", ok,
	       fmt::format("BR {:.4f} and {:.4f}; sMAPE {} / {} / {:.3f}", br1, br2, s0, s200, s66));
}

// 3 ---------------------------------------------------------------------

long double brute_smape(const std::vector<double>& a, const std::vector<double>& f) {
	long double total = 0;
	for (std::size_t i = 0; i < a.size(); ++i) {
		const long double den = std::fabs(static_cast<long double>(a[i])) + std::fabs(static_cast<long double>(f[i]));
		if (den > 0) {
			total += std::fabs(static_cast<long double>(a[i]) - f[i]) / den;
		}
	}
	return 200.0L * total / a.size();
}

long double brute_mae(const std::vector<double>& a, const std::vector<double>& f) {
	long double total = 0;
	for (std::size_t i = 0; i < a.size(); ++i) {
		total += std::fabs(static_cast<long double>(a[i]) - f[i]);
	}
	return total / a.size();
}

void metric_oracles() {
	std::mt19937_64 rng(2024);
	std::uniform_real_distribution<double> u(0.0, 1.0);
	std::uniform_int_distribution<int> msize(2, 8);
	double worst_smape = 0.0, worst_mae = 0.0, worst_sum = 0.0;
	int hull_violations = 0;
	const auto rel = [](long double want, double got) {
		return static_cast<double>(std::fabs(want - got) / std::max(1.0L, std::fabs(want)));
	};
	for (int rep = 0; rep < 1000; ++rep) {
		std::vector<double> a(52), f(52);
		for (std::size_t i = 0; i < 52; ++i) {
			a[i] = u(rng) < 0.05 ? 0.0 : 150.0 * u(rng);
			f[i] = u(rng) < 0.05 ? 0.0 : 150.0 * u(rng);
		}
		worst_smape = std::max(worst_smape, rel(brute_smape(a, f), evaluation::smape(a, f)));
		worst_mae = std::max(worst_mae, rel(brute_mae(a, f), evaluation::mae(a, f)));

		const int m = msize(rng);
		std::vector<double> phi(static_cast<std::size_t>(m));
		for (auto& p : phi) {
			p = 0.5 + 40.0 * u(rng);
		}
		const auto w = ensemble::compute_weights(phi);
		worst_sum = std::max(worst_sum, std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0));
		std::vector<models::Forecast> members;
		for (int i = 0; i < m; ++i) {
			std::vector<double> v(52);
			for (auto& x : v) {
				x = 100.0 * u(rng);
			}
			members.push_back({"S", "M" + std::to_string(i), v});
		}
		for (auto method : ensemble::kAllMethods) {
			const auto c = ensemble::combine(members, method, phi);
			for (std::size_t h = 0; h < 52; ++h) {
				double lo = members[0].values[h], hi = lo;
				for (const auto& mf : members) {
					lo = std::min(lo, mf.values[h]);
					hi = std::max(hi, mf.values[h]);
				}
				hull_violations += c.values[h] < lo || c.values[h] > hi;
			}
		}
	}
	const bool ok = worst_smape <= 1e-12 && worst_mae <= 1e-12 && worst_sum <= 1e-12 && hull_violations == 0;
	report(3, "metric and combination oracles", ok,
	       fmt::format("max rel. error sMAPE {:.2e}, MAE {:.2e}; max |sum w - 1| {:.2e}; hull violations {}",
	                   worst_smape, worst_mae, worst_sum, hull_violations));
}

// 4 ---------------------------------------------------------------------

void model_sanity() {
	const auto t0 = Clock::now();
	const models::FitConfig config;
	std::vector<std::string> problems;

	const std::vector<double> constant(105, 37.5);
	double worst_constant = 0.0;
	for (auto id : models::kPublicModels) {
		for (double v : models::run_model(id, constant, 52, config).values) {
			worst_constant = std::max(worst_constant, std::abs(v - 37.5));
		}
	}
	if (worst_constant > 1e-6) {
		problems.push_back(fmt::format("constant off by {:.2e}", worst_constant));
	}

	std::mt19937_64 rng(4);
	std::uniform_real_distribution<double> u(20.0, 80.0);
	std::vector<double> cycle(52);
	for (auto& v : cycle) {
		v = u(rng);
	}
	std::vector<double> periodic = cycle;
	periodic.insert(periodic.end(), cycle.begin(), cycle.end());
	const bool snaive_exact = models::forecast_snaive(periodic, 52, 52) == cycle;
	if (!snaive_exact) {
		problems.push_back("SNaive not exact on periodic input");
	}
	double worst_periodic = 0.0;
	for (auto id : {models::ModelId::HW, models::ModelId::StlDrift, models::ModelId::StlEs, models::ModelId::StlHolt,
	                models::ModelId::StlArima}) {
		const auto f = models::run_model(id, periodic, 52, config).values;
		for (std::size_t i = 0; i < 52; ++i) {
			worst_periodic = std::max(worst_periodic, std::abs(f[i] - cycle[i]) / std::abs(cycle[i]));
		}
	}
	if (worst_periodic > 0.01) {
		problems.push_back(fmt::format("periodic off by {:.2e} relative", worst_periodic));
	}

	std::vector<double> line;
	for (int i = 0; i < 105; ++i) {
		line.push_back(12.0 + 0.4 * i);
	}
	const auto holt = models::forecast_holt(line, 52, config);
	double worst_line = 0.0;
	for (int h = 1; h <= 52; ++h) {
		const double want = 12.0 + 0.4 * (104 + h);
		worst_line = std::max(worst_line, std::abs(holt[static_cast<std::size_t>(h - 1)] - want) / want);
	}
	if (worst_line > 1e-3) {
		problems.push_back(fmt::format("Holt line off by {:.2e} relative", worst_line));
	}

	std::normal_distribution<double> n(0.0, 1.0);
	const models::SarimaOrder ar1{1, 0, 0, 0, 0, 0, 52, true};
	std::vector<double> phis;
	for (int rep = 0; rep < 200; ++rep) {
		std::vector<double> y(105);
		double x = n(rng) / std::sqrt(1.0 - 0.64);
		for (auto& v : y) {
			x = 0.8 * x + n(rng);
			v = 30.0 + x;
		}
		phis.push_back(models::fit_sarima(y, ar1, config).ar.at(0));
	}
	const double mean_phi = std::accumulate(phis.begin(), phis.end(), 0.0) / 200.0;
	const auto in_band =
	    std::count_if(phis.begin(), phis.end(), [](double p) { return std::abs(p - 0.8) <= 0.15; });
	if (std::abs(mean_phi - 0.8) > 0.15 || in_band < 180) {
		problems.push_back(fmt::format("AR(1) mean {:.3f}, {} of 200 in band", mean_phi, in_band));
	}

	const double secs = seconds_since(t0);
	if (secs >= 300.0) {
		problems.push_back(fmt::format("took {:.1f} s", secs));
	}
	std::string detail = fmt::format(
	    "constant max err {:.1e}; SNaive periodic {}; HW/STL periodic max rel err {:.1e}; Holt line max rel err "
	    "{:.1e}; AR(1) mean phi {:.3f}, {}/200 within 0.15; {:.1f} s",
	    worst_constant, snaive_exact ? "exact" : "inexact", worst_periodic, worst_line, mean_phi, in_band, secs);
	for (const auto& p : problems) {
		detail += "; " + p;
	}
	report(4, "model sanity", problems.empty(), detail);
}

// 5 and 7 ---------------------------------------------------------------

struct PipelineOutput {
	io::EvaluationRun evaluation;
	double seconds = 0.0;
};

// Full stage chain through the CSV contracts, writing into `dir`.
PipelineOutput run_pipeline(const fs::path& dir, int jobs) {
	const auto t0 = Clock::now();
	fs::create_directories(dir);
	io::RunConfig config;
	config.jobs = jobs;

	io::SyntheticSpec spec;
	spec.n_series = 200;
	spec.length_weeks = 157;
	spec.seed = 42;
	const auto corpus = io::generate_corpus(spec);
	io::write_synthetic_weekly((dir / "synthetic.csv").string(), corpus);

	const auto pre = io::preprocess_weekly(io::read_weekly_rows((dir / "synthetic.csv").string()),
	                                       config.train_len + config.horizon);
	io::write_weekly_csv((dir / "weekly.csv").string(), pre.accepted);
	const auto weekly = io::read_weekly_csv((dir / "weekly.csv").string());

	const auto fc = io::run_forecasts(weekly, config);
	io::write_forecast_csv((dir / "forecasts.csv").string(), fc.forecasts);
	auto index = io::read_forecast_csv((dir / "forecasts.csv").string());
	const auto actuals = io::actuals_from(weekly, config);

	const auto individual = io::run_evaluation(index, actuals, config);
	io::write_leaderboard_csv((dir / "leaderboard_individual.csv").string(), individual.corpus.individual.leaderboard);
	const auto phi = evaluation::phi_from_leaderboard(
	    io::read_leaderboard_csv((dir / "leaderboard_individual.csv").string()));
	const auto ens = io::run_ensembles(index, config, {&phi, nullptr});
	io::write_forecast_csv((dir / "ensemble_forecasts.csv").string(), ens.forecasts);
	io::read_forecast_csv((dir / "ensemble_forecasts.csv").string(), index);

	PipelineOutput out;
	out.evaluation = io::run_evaluation(index, actuals, config);
	io::write_evaluation((dir / "evaluation").string(), out.evaluation, config);
	out.seconds = seconds_since(t0);
	return out;
}

void synthetic_reproduction(const PipelineOutput& run) {
	const auto& ind = run.evaluation.corpus.individual.leaderboard;
	const auto& ens = *run.evaluation.corpus.ensemble;
	const double br_arima = ind.find("STL-ARIMA")->benchmark_ratio;
	const double br_es = ind.find("STL-ES")->benchmark_ratio;
	const bool a = br_arima < 1.0 && br_es < 1.0;

	const auto sizes = evaluation::size_aggregates(ens.leaderboard, ensemble::CombinationMethod::Mean);
	int inversions = 0;
	bool small = true;
	std::string trail;
	for (std::size_t i = 0; i < sizes.size(); ++i) {
		trail += (i ? " " : "") + fmt::format("{:.3f}", sizes[i].mean);
		if (i > 0 && sizes[i].mean > sizes[i - 1].mean) {
			++inversions;
			small = small && sizes[i].mean - sizes[i - 1].mean <= 0.1;
		}
	}
	const bool b = sizes.size() == 7 && inversions <= 1 && small;

	const auto cmp = evaluation::compare_leaders(run.evaluation.corpus);
	const bool c = cmp.win_fraction > 0.5;
	const bool fast = run.seconds < 1800.0;
	report(5, "synthetic corpus reproduction", a && b && c && fast,
	       fmt::format("(a) BR STL-ARIMA {:.3f}, STL-ES {:.3f}; (b) MEAN size 2..8 mean sMAPE {} ({} inversions); "
	                   "(c) {} beats {} on {:.1f} % of {} series; {:.1f} s",
	                   br_arima, br_es, trail, inversions, cmp.ensemble_producer, cmp.individual_producer,
	                   100.0 * cmp.win_fraction, cmp.points.size(), run.seconds));
}

void determinism(const fs::path& first_dir, const fs::path& second_dir, int first_jobs, int second_jobs) {
	std::vector<std::string> differing;
	int compared = 0;
	for (const char* name : {"leaderboard_individual.csv", "leaderboard_ensemble.csv"}) {
		const auto a = slurp(first_dir / "evaluation" / name);
		const auto b = slurp(second_dir / "evaluation" / name);
		++compared;
		if (a.empty() || a != b) {
			differing.push_back(name);
		}
	}
	for (const char* name : {"forecasts.csv", "ensemble_forecasts.csv"}) {
		++compared;
		if (slurp(first_dir / name) != slurp(second_dir / name)) {
			differing.push_back(name);
		}
	}
	std::string detail = fmt::format("--jobs {} vs --jobs {}: {} files compared", first_jobs, second_jobs, compared);
	detail += differing.empty() ? ", all byte-identical" : ", differing:";
	for (const auto& d : differing) {
		detail += " " + d;
	}
	report(7, "determinism", differing.empty(), detail);
}

// 6 ---------------------------------------------------------------------

// Raw series of `weeks` full weeks from 2021-W01; `short_weeks` maps a week
// index to the number of samples it keeps.
core::RawSeries fixture(const std::string& id, int weeks, const std::map<int, int>& short_weeks) {
	using namespace std::chrono;
	core::RawSeries raw{id, {}};
	const sys_seconds start{sys_days{2021y / January / 4}};
	for (int w = 0; w < weeks; ++w) {
		const auto it = short_weeks.find(w);
		const int keep = it == short_weeks.end() ? core::kSlotsPerWeek : it->second;
		for (int k = 0; k < keep; ++k) {
			// week w has the constant value w + 1, so fills are traceable
			raw.samples.push_back({start + minutes{10 * (w * core::kSlotsPerWeek + k)}, static_cast<double>(w + 1)});
		}
	}
	return raw;
}

std::map<int, int> absent_every(int step, int count, int offset = 2) {
	std::map<int, int> m;
	for (int i = 0; i < count; ++i) {
		m[offset + step * i] = 0;
	}
	return m;
}

struct Expected {
	std::string reason;              // empty when accepted
	std::vector<int> filled_weeks;   // accepted series only
	std::map<int, double> values;    // spot checks of utilization
};

void preprocessing_conformance() {
	const int weeks = 157;
	std::vector<core::RawSeries> raw;
	std::map<std::string, Expected> want;

	raw.push_back(fixture("V957/UNB/110", weeks, {{5, 957}}));
	want["V957/UNB/110"] = {"", {5}, {{5, 500.0}, {6, 700.0}}};
	raw.push_back(fixture("V958/UNB/110", weeks, {{5, 958}}));
	want["V958/UNB/110"] = {"", {}, {{5, 600.0}}};
	raw.push_back(fixture("V950/UNB/110", weeks, {{0, 950}}));
	want["V950/UNB/110"] = {"unfillable-gap", {}, {}};

	std::map<int, int> ten;
	for (int w = 20; w < 30; ++w) {
		ten[w] = 0;
	}
	raw.push_back(fixture("F10/THD/380", weeks, ten));
	std::vector<int> ten_weeks;
	for (int w = 20; w < 30; ++w) {
		ten_weeks.push_back(w);
	}
	want["F10/THD/380"] = {"", ten_weeks, {{19, 20.0 * 50.0}, {29, 20.0 * 50.0}, {30, 31.0 * 50.0}}};
	auto eleven = ten;
	eleven[30] = 0;
	raw.push_back(fixture("F11/THD/380", weeks, eleven));
	want["F11/THD/380"] = {"unfillable-gap", {}, {}};

	// 31 of 157 absent is 19.7 %, 32 of 157 is 20.4 %
	raw.push_back(fixture("G31/UNB/110", weeks, absent_every(5, 31)));
	std::vector<int> g31;
	for (int i = 0; i < 31; ++i) {
		g31.push_back(2 + 5 * i);
	}
	want["G31/UNB/110"] = {"", g31, {{2, 200.0}, {152, 15200.0}}};
	raw.push_back(fixture("G32/UNB/110", weeks, absent_every(4, 32)));
	want["G32/UNB/110"] = {"too-many-gaps", {}, {}};

	const std::vector<core::PlanningLevel> levels{{"UNB", "110", 1.0}, {"THD", "380", 2.0}};
	const auto result = io::preprocess_raw(raw, levels, weeks);

	int matched = 0;
	std::vector<std::string> mismatches;
	for (const auto& [id, expected] : want) {
		bool ok = true;
		const auto acc = std::find_if(result.accepted.begin(), result.accepted.end(),
		                              [&](const auto& s) { return s.series_id == id; });
		const auto rej = std::find_if(result.rejected.begin(), result.rejected.end(),
		                              [&](const auto& r) { return r.series_id == id; });
		if (expected.reason.empty()) {
			ok = acc != result.accepted.end() && rej == result.rejected.end();
			if (ok) {
				std::vector<int> filled;
				for (std::size_t i = 0; i < acc->filled.size(); ++i) {
					if (acc->filled[i]) {
						filled.push_back(static_cast<int>(i));
					}
				}
				ok = filled == expected.filled_weeks && acc->size() == static_cast<std::size_t>(weeks);
				for (const auto& [week, value] : expected.values) {
					ok = ok && acc->values[static_cast<std::size_t>(week)] == value;
				}
			}
		} else {
			ok = acc == result.accepted.end() && rej != result.rejected.end() && rej->reason == expected.reason;
		}
		if (ok) {
			++matched;
		} else {
			mismatches.push_back(id);
		}
	}
	std::string detail = fmt::format("{} of {} fixture series match the expected decision ({} accepted, {} rejected)",
	                                 matched, want.size(), result.accepted.size(), result.rejected.size());
	for (const auto& m : mismatches) {
		detail += "; mismatch " + m;
	}
	report(6, "preprocessing conformance", mismatches.empty(), detail);
}

} // namespace

int main() {
	try {
		enumeration();
		paper_formulas();
		metric_oracles();
		model_sanity();

		const fs::path root = fs::temp_directory_path() / ("pqf_acceptance_" + std::to_string(::getpid()));
		fs::remove_all(root);
		const int jobs = static_cast<int>(std::max(4u, std::thread::hardware_concurrency()));
		const auto first = run_pipeline(root / "run_a", jobs);
		synthetic_reproduction(first);
		preprocessing_conformance();
		run_pipeline(root / "run_b", 1);
		determinism(root / "run_a", root / "run_b", jobs, 1);
		fs::remove_all(root);
	} catch (const std::exception& e) {
		fmt::print("FAIL internal error: {}\n", e.what());
		return 1;
	}
	return failures == 0 ? 0 : 1;
}
