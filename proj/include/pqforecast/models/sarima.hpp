#pragma once

#include "pqforecast/models/fit_config.hpp"
#include "pqforecast/models/forecast.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pqf::models {

/// (p,d,q)(P,D,Q)[period], with an intercept when `constant` is set (only
/// meaningful without differencing).
struct SarimaOrder {
	int p = 0;
	int d = 0;
	int q = 0;
	int P = 0;
	int D = 0;
	int Q = 0;
	int period = 52;
	bool constant = false;

	auto operator<=>(const SarimaOrder&) const = default;
};

std::string to_string(const SarimaOrder& order);

struct SarimaFit {
	SarimaOrder order;
	std::vector<double> ar;
	std::vector<double> ma;
	std::vector<double> seasonal_ar;
	std::vector<double> seasonal_ma;
	double intercept = 0.0;   // process mean in data units (0 without constant)
	double css = 0.0;         // conditional sum of squares, standardized units
	int n_obs = 0;            // residuals entering the CSS
	double aicc = 0.0;
	double score = 0.0;       // aicc / n_obs, used to compare orders
	bool converged = false;

	// State needed to extrapolate (standardized units).
	double z_mean = 0.0;
	double z_scale = 1.0;
	double w_mean = 0.0;
	std::vector<double> w;
	std::vector<double> residuals;
	std::vector<std::vector<double>> heads_regular;
	std::vector<std::vector<double>> heads_seasonal;
};

/// Estimates a fixed order by conditional sum of squares: the first p
/// differenced values are conditioned on, earlier values and innovations are
/// taken at their mean. Parameter vectors whose AR or MA polynomials have a
/// root inside radius 1.001 are rejected. Throws DataError when the series is
/// constant or too short for the order.
SarimaFit fit_sarima(std::span<const double> y, const SarimaOrder& order, const FitConfig& config);

/// ARMA recursion on the differenced series, integrated back to data units.
std::vector<double> sarima_forecast(const SarimaFit& fit, int horizon);

/// Orders admitted by the grid for a series of length n.
std::vector<SarimaOrder> candidate_orders(const ArimaSearch& search, int n, int period);

/// 1 when seasonal differencing lowers the sample variance of the series,
/// else 0.
int seasonal_differences(std::span<const double> y, int period);

struct ArimaSelection {
	std::optional<SarimaFit> best;
	std::vector<double> forecast;
	std::vector<std::string> warnings;
};

/// AICc grid search over `search`. The seasonal differencing order is fixed
/// beforehand by seasonal_differences; the remaining orders are compared by
/// AICc per residual so candidates with different d stay comparable.
/// Constant input short-circuits to a flat forecast with no fit.
ArimaSelection auto_arima(std::span<const double> y, int horizon, const ArimaSearch& search, int period,
                          const FitConfig& config);

/// Seasonal search at the configured period; falls back to SNaive with a
/// warning when no order is admissible.
ModelOutput forecast_sarima(std::span<const double> train, int horizon, const FitConfig& config);

/// Non-seasonal search (config.stl_arima); falls back to Naive.
ModelOutput forecast_arima(std::span<const double> train, int horizon, const FitConfig& config);

} // namespace pqf::models
