#pragma once

#include <span>
#include <vector>

namespace pqf::numerics {

/// Knobs of the STL inner/outer loop. Zero-valued windows are derived from
/// the period and series length (see stl_decompose).
struct StlConfig {
	int period = 52;
	// Periodic seasonal: each cycle-subseries is smoothed to its
	// (robustness-weighted) mean, so the seasonal pattern repeats exactly.
	bool periodic = true;
	int seasonal_window = 0;
	int seasonal_degree = 0;
	int trend_window = 0;
	int trend_degree = 1;
	int lowpass_window = 0;
	int lowpass_degree = 1;
	int inner_iterations = 2;
	int outer_iterations = 1;
};

struct Decomposition {
	std::vector<double> trend;
	std::vector<double> seasonal;
	std::vector<double> remainder;
	int period = 0;
};

/// Additive seasonal-trend decomposition by loess (Cleveland et al.).
///
/// Default windows: seasonal = 10n + 1 when periodic, otherwise 7; trend =
/// smallest odd integer >= 1.5 p / (1 - 1.5 / seasonal); low-pass = smallest
/// odd integer >= p. The outer loop recomputes bisquare robustness weights
/// from the remainder `outer_iterations` times.
///
/// Throws std::invalid_argument when the series is shorter than two periods.
Decomposition stl_decompose(std::span<const double> y, const StlConfig& config = {});

} // namespace pqf::numerics
