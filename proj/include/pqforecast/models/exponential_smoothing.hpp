#pragma once

#include "pqforecast/models/fit_config.hpp"

#include <span>
#include <vector>

namespace pqf::models {

enum class SmoothingKind {
	Simple,      // level only
	Holt,        // level + additive trend
	HoltWinters, // level + additive trend + additive seasonality
};

struct SmoothingResult {
	double alpha = 0.0;
	double beta = 0.0;
	double gamma = 0.0;
	double mse = 0.0; // in-sample one-step MSE on the standardized series
	bool converged = true;
	std::vector<double> forecast;
};

/// Fits the smoothing parameters by minimizing the in-sample one-step squared
/// error with Nelder-Mead over [1e-4, 0.9999]^d and extrapolates `horizon`
/// steps. Initial state: trend = change of the period means divided by the
/// period, level = mean of the first period moved back from the middle of
/// that period to the origin along the trend, seasonals = first-period
/// deviations from that trend line (from the plain mean when flat).
///
/// Needs >= 10 points (Simple, Holt) or two full seasons (HoltWinters,
/// otherwise DataError "needs two seasons").
SmoothingResult exponential_smoothing(std::span<const double> train, int horizon, SmoothingKind kind,
                                      const FitConfig& config);

std::vector<double> forecast_es(std::span<const double> train, int horizon, const FitConfig& config);
std::vector<double> forecast_holt(std::span<const double> train, int horizon, const FitConfig& config);
std::vector<double> forecast_hw(std::span<const double> train, int horizon, const FitConfig& config);

} // namespace pqf::models
