#pragma once

#include <span>
#include <vector>

namespace pqf::models {

/// Last observation repeated. Throws DataError on empty input.
std::vector<double> forecast_naive(std::span<const double> train, int horizon);

/// Straight line through the first and last observation, extrapolated:
/// y_T + h (y_T - y_1) / (T - 1). Needs at least two points.
std::vector<double> forecast_drift(std::span<const double> train, int horizon);

/// Value one seasonal cycle earlier: y_{T+h-m*ceil(h/m)}. Needs one full cycle.
std::vector<double> forecast_snaive(std::span<const double> train, int horizon, int period);

} // namespace pqf::models
