#pragma once

#include "pqforecast/models/fit_config.hpp"

#include <span>
#include <vector>

namespace pqf::models {

/// Changepoint positions in normalized time [0, 1]: evenly spaced over the
/// first `range` share of the training indices, excluding the origin.
std::vector<double> changepoint_times(int n, const ProphetConfig& config);

/// Additive trend + seasonality regression: piecewise-linear trend with
/// ridge-penalized slope changes at fixed changepoints, plus a Fourier series
/// on the seasonal period. All terms are fit jointly; the forecast continues
/// the last trend segment. No holidays, linear growth only.
std::vector<double> forecast_prophet_like(std::span<const double> train, int horizon, const ProphetConfig& config,
                                          int period);

} // namespace pqf::models
