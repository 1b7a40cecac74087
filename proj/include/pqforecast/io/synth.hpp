#pragma once

#include "pqforecast/core/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pqf::io {

struct Range {
	double min = 0.0;
	double max = 0.0;
};

/// Generator knobs. Every series draws its own components uniformly from the
/// ranges below.
struct SyntheticSpec {
	int n_series = 200;
	int length_weeks = 157;
	std::uint64_t seed = 42;
	Range base_level{20.0, 80.0};        // percent utilization
	double max_trend_slope = 0.05;       // percent points per week, either sign
	Range seasonal_amplitude{2.0, 15.0}; // percent points
	double sinusoid_fraction = 0.5;      // remaining series use a sampled periodic pattern
	Range noise_sd{1.0, 4.0};            // marginal sd of the AR(1) noise
	double max_ar_coefficient = 0.6;
	double outlier_rate = 0.01;          // per week
	Range outlier_size{3.0, 6.0};        // in noise sd, added upward
	double missing_rate = 0.0;           // per week
	int period = 52;
};

/// Generating components of one series; `value` is what gets written.
struct SeriesTruth {
	std::string series_id;
	double base_level = 0.0;
	double trend_slope = 0.0;
	double seasonal_amplitude = 0.0;
	std::string seasonal_shape; // "sinusoid" or "pattern"
	double noise_sd = 0.0;
	double ar_coefficient = 0.0;
	std::vector<double> trend;
	std::vector<double> seasonal;
	std::vector<double> noise;
	std::vector<double> outlier;
	std::vector<double> value;  // max(0, trend + seasonal + noise + outlier)
	std::vector<bool> missing;
	int outlier_count = 0;
	int missing_count = 0;
};

struct SyntheticCorpus {
	core::IsoWeek start_week{2021, 1};
	std::vector<SeriesTruth> series;
};

/// Throws std::invalid_argument for nonpositive dimensions or inverted ranges.
SyntheticCorpus generate_corpus(const SyntheticSpec& spec);

/// Planning level used for the (parameter, voltage) pair of a synthetic series.
core::PlanningLevel synthetic_planning_level(const std::string& series_id);

/// Weekly CSV of the present weeks (missing weeks have no row).
void write_synthetic_weekly(const std::string& path, const SyntheticCorpus& corpus);

/// Ten-minute raw CSV in native units whose weekly 95th percentile equals
/// the generated utilization, with missing weeks left almost empty.
void write_synthetic_raw(const std::string& path, const SyntheticCorpus& corpus, std::uint64_t seed);

/// Planning levels for every pair in the corpus, as INI sections.
void write_synthetic_planning_levels(const std::string& path, const SyntheticCorpus& corpus);

/// `<prefix>.csv` with per-series parameters and `<prefix>_components.csv`
/// with the weekly components.
void write_ground_truth(const std::string& prefix, const SyntheticCorpus& corpus);

} // namespace pqf::io
