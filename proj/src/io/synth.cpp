#include "pqforecast/io/synth.hpp"

#include "pqforecast/core/preprocess.hpp"
#include "pqforecast/io/csv.hpp"
#include "pqforecast/io/timestamp.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace pqf::io {

namespace {

struct PairInfo {
	const char* parameter;
	const char* voltage;
	double level;
};

constexpr PairInfo kPairs[] = {
    {"UNB", "110", 1.4},  {"UNB", "380", 1.0},  {"THD", "110", 3.0},
    {"THD", "380", 1.5},  {"H5", "110", 2.5},   {"H5", "380", 1.2},
};

double uniform(std::mt19937_64& rng, Range r) {
	if (r.max == r.min) {
		return r.min;
	}
	return std::uniform_real_distribution<double>(r.min, r.max)(rng);
}

void check_range(Range r, const char* what) {
	if (!(r.min <= r.max) || !std::isfinite(r.min) || !std::isfinite(r.max)) {
		throw std::invalid_argument(std::string("synthetic spec: invalid range for ") + what);
	}
}

std::vector<double> sampled_pattern(std::mt19937_64& rng, int period) {
	// one draw per week of the cycle, lightly smoothed around the circle and
	// scaled to unit peak
	std::normal_distribution<double> normal(0.0, 1.0);
	std::vector<double> raw(static_cast<std::size_t>(period));
	for (auto& v : raw) {
		v = normal(rng);
	}
	const auto n = raw.size();
	std::vector<double> p(n);
	for (std::size_t t = 0; t < n; ++t) {
		p[t] = 0.25 * raw[(t + n - 1) % n] + 0.5 * raw[t] + 0.25 * raw[(t + 1) % n];
	}
	const double mean = std::accumulate(p.begin(), p.end(), 0.0) / static_cast<double>(n);
	double peak = 0.0;
	for (double& v : p) {
		v -= mean;
		peak = std::max(peak, std::abs(v));
	}
	if (peak > 0.0) {
		for (double& v : p) {
			v /= peak;
		}
	}
	return p;
}

} // namespace

SyntheticCorpus generate_corpus(const SyntheticSpec& spec) {
	if (spec.n_series < 1 || spec.length_weeks < 1 || spec.period < 2) {
		throw std::invalid_argument("synthetic spec: n_series, length_weeks and period must be positive");
	}
	check_range(spec.base_level, "base_level");
	check_range(spec.seasonal_amplitude, "seasonal_amplitude");
	check_range(spec.noise_sd, "noise_sd");
	check_range(spec.outlier_size, "outlier_size");
	for (double p : {spec.sinusoid_fraction, spec.outlier_rate, spec.missing_rate}) {
		if (!(p >= 0.0 && p <= 1.0)) {
			throw std::invalid_argument("synthetic spec: rates must lie in [0, 1]");
		}
	}
	if (!(spec.max_ar_coefficient >= 0.0 && spec.max_ar_coefficient < 1.0) || !(spec.max_trend_slope >= 0.0) ||
	    spec.noise_sd.min < 0.0) {
		throw std::invalid_argument("synthetic spec: invalid trend, noise or AR bound");
	}

	SyntheticCorpus corpus;
	const auto n = static_cast<std::size_t>(spec.length_weeks);
	for (int i = 0; i < spec.n_series; ++i) {
		std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
		                  static_cast<std::uint32_t>(i)};
		std::mt19937_64 rng(seq);
		std::uniform_real_distribution<double> unit(0.0, 1.0);
		std::normal_distribution<double> normal(0.0, 1.0);

		const auto& pair = kPairs[static_cast<std::size_t>(i) % std::size(kPairs)];
		SeriesTruth s;
		s.series_id = fmt::format("SYN{:04}/{}/{}", i + 1, pair.parameter, pair.voltage);
		s.base_level = uniform(rng, spec.base_level);
		s.trend_slope = uniform(rng, {-spec.max_trend_slope, spec.max_trend_slope});
		s.seasonal_amplitude = uniform(rng, spec.seasonal_amplitude);
		const bool sinusoid = unit(rng) < spec.sinusoid_fraction;
		s.seasonal_shape = sinusoid ? "sinusoid" : "pattern";
		std::vector<double> shape;
		if (sinusoid) {
			const double phase = unit(rng) * 2.0 * std::numbers::pi;
			for (int t = 0; t < spec.period; ++t) {
				shape.push_back(std::sin(2.0 * std::numbers::pi * t / spec.period + phase));
			}
		} else {
			shape = sampled_pattern(rng, spec.period);
		}
		s.noise_sd = uniform(rng, spec.noise_sd);
		s.ar_coefficient = uniform(rng, {0.0, spec.max_ar_coefficient});
		const double innovation_sd = s.noise_sd * std::sqrt(1.0 - s.ar_coefficient * s.ar_coefficient);

		s.trend.resize(n);
		s.seasonal.resize(n);
		s.noise.resize(n);
		s.outlier.assign(n, 0.0);
		s.value.resize(n);
		s.missing.assign(n, false);
		double e = s.noise_sd * normal(rng);
		for (std::size_t t = 0; t < n; ++t) {
			if (t > 0) {
				e = s.ar_coefficient * e + innovation_sd * normal(rng);
			}
			s.trend[t] = s.base_level + s.trend_slope * static_cast<double>(t);
			s.seasonal[t] = s.seasonal_amplitude * shape[t % static_cast<std::size_t>(spec.period)];
			s.noise[t] = e;
			if (unit(rng) < spec.outlier_rate) {
				s.outlier[t] = uniform(rng, spec.outlier_size) * std::max(s.noise_sd, 1.0);
				++s.outlier_count;
			}
			s.value[t] = std::max(0.0, s.trend[t] + s.seasonal[t] + s.noise[t] + s.outlier[t]);
			if (unit(rng) < spec.missing_rate) {
				s.missing[t] = true;
				++s.missing_count;
			}
		}
		corpus.series.push_back(std::move(s));
	}
	return corpus;
}

core::PlanningLevel synthetic_planning_level(const std::string& series_id) {
	const auto key = core::SeriesKey::parse(series_id);
	for (const auto& p : kPairs) {
		if (key.parameter == p.parameter && key.voltage_level == p.voltage) {
			return {key.parameter, key.voltage_level, p.level};
		}
	}
	throw std::invalid_argument("not a synthetic series id: " + series_id);
}

void write_synthetic_weekly(const std::string& path, const SyntheticCorpus& corpus) {
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "series_id,iso_year,iso_week,utilization_percent,filled\n");
	for (const auto& s : corpus.series) {
		auto week = corpus.start_week;
		for (std::size_t t = 0; t < s.value.size(); ++t, week = core::next_week(week)) {
			if (s.missing[t]) {
				continue;
			}
			fmt::format_to(std::back_inserter(buf), "{},{},{},{},0\n", s.series_id, week.year, week.week,
			               format_double(s.value[t]));
		}
	}
	write_text_file(path, std::string_view(buf.data(), buf.size()));
}

void write_synthetic_raw(const std::string& path, const SyntheticCorpus& corpus, std::uint64_t seed) {
	std::string out = "series_id,timestamp_iso8601,value\n";
	std::vector<double> week_values(core::kSlotsPerWeek);
	for (std::size_t i = 0; i < corpus.series.size(); ++i) {
		const auto& s = corpus.series[i];
		const double level = synthetic_planning_level(s.series_id).level;
		std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
		                  static_cast<std::uint32_t>(i), 0x5eedu};
		std::mt19937_64 rng(seq);
		std::normal_distribution<double> normal(0.0, 0.03);
		auto week = corpus.start_week;
		for (std::size_t t = 0; t < s.value.size(); ++t, week = core::next_week(week)) {
			const auto monday = core::monday_of(week);
			// daily load profile with a little jitter, scaled so its 95th
			// percentile equals the weekly target
			for (int k = 0; k < core::kSlotsPerWeek; ++k) {
				const double hour = (k % 144) / 6.0;
				week_values[static_cast<std::size_t>(k)] =
				    std::max(0.05, 0.8 + 0.15 * std::sin(2.0 * std::numbers::pi * (hour - 6.0) / 24.0) + normal(rng));
			}
			const double p95 = core::percentile(week_values, 0.95);
			const double target = s.value[t] * level / 100.0;
			const int keep = s.missing[t] ? core::kSlotsPerWeek / 2 : core::kSlotsPerWeek;
			for (int k = 0; k < keep; ++k) {
				const auto ts = core::Timestamp(monday) + std::chrono::minutes(10 * k);
				out += s.series_id;
				out += ',';
				out += format_timestamp(ts);
				out += ',';
				out += format_double(week_values[static_cast<std::size_t>(k)] / p95 * target);
				out += '\n';
			}
		}
	}
	write_text_file(path, out);
}

void write_synthetic_planning_levels(const std::string& path, const SyntheticCorpus& corpus) {
	std::map<std::pair<std::string, std::string>, double> levels;
	for (const auto& s : corpus.series) {
		const auto pl = synthetic_planning_level(s.series_id);
		levels[{pl.parameter, pl.voltage_level}] = pl.level;
	}
	std::string out;
	for (const auto& [key, level] : levels) {
		out += fmt::format("[planning:{}:{}]\nlevel = {}\n\n", key.first, key.second, format_double(level));
	}
	write_text_file(path, out);
}

void write_ground_truth(const std::string& prefix, const SyntheticCorpus& corpus) {
	fmt::memory_buffer params;
	fmt::format_to(std::back_inserter(params),
	               "series_id,base_level,trend_slope,seasonal_amplitude,seasonal_shape,noise_sd,ar_coefficient,"
	               "outlier_count,missing_weeks\n");
	fmt::memory_buffer comps;
	fmt::format_to(std::back_inserter(comps), "series_id,t,trend,seasonal,noise,outlier,value,missing\n");
	for (const auto& s : corpus.series) {
		fmt::format_to(std::back_inserter(params), "{},{},{},{},{},{},{},{},{}\n", s.series_id,
		               format_double(s.base_level), format_double(s.trend_slope), format_double(s.seasonal_amplitude),
		               s.seasonal_shape, format_double(s.noise_sd), format_double(s.ar_coefficient), s.outlier_count,
		               s.missing_count);
		for (std::size_t t = 0; t < s.value.size(); ++t) {
			fmt::format_to(std::back_inserter(comps), "{},{},{},{},{},{},{},{}\n", s.series_id, t,
			               format_double(s.trend[t]), format_double(s.seasonal[t]), format_double(s.noise[t]),
			               format_double(s.outlier[t]), format_double(s.value[t]), s.missing[t] ? 1 : 0);
		}
	}
	write_text_file(prefix + ".csv", std::string_view(params.data(), params.size()));
	write_text_file(prefix + "_components.csv", std::string_view(comps.data(), comps.size()));
}

} // namespace pqf::io
