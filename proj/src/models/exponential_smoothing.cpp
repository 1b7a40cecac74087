#include "pqforecast/models/exponential_smoothing.hpp"

#include "standardize.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/numerics/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

namespace pqf::models {

namespace {

constexpr double kLower = 1e-4;
constexpr double kUpper = 0.9999;

struct InitialState {
	double level = 0.0;
	double trend = 0.0;
	std::vector<double> seasonal;
};

double mean_of(std::span<const double> v) {
	return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

InitialState initial_state(std::span<const double> z, SmoothingKind kind, int period) {
	InitialState s;
	const auto n = z.size();
	// Non-seasonal fits on short series use half the data as the "period".
	const std::size_t k = kind == SmoothingKind::HoltWinters
	                          ? static_cast<std::size_t>(period)
	                          : std::min(static_cast<std::size_t>(period), std::max<std::size_t>(1, n / 2));
	const double first = mean_of(z.subspan(0, k));
	if (kind != SmoothingKind::Simple && n >= 2 * k) {
		const double second = mean_of(z.subspan(k, k));
		s.trend = (second - first) / static_cast<double>(k);
	}
	// The first-period mean is the level at the middle of that period; the
	// recursion starts one step before observation 0.
	const double centre = (static_cast<double>(k) - 1.0) / 2.0;
	s.level = first - s.trend * (centre + 1.0);
	if (kind == SmoothingKind::HoltWinters) {
		s.seasonal.resize(k);
		for (std::size_t i = 0; i < k; ++i) {
			s.seasonal[i] = z[i] - (first + s.trend * (static_cast<double>(i) - centre));
		}
	}
	return s;
}

// Runs the recursion; returns the one-step MSE and optionally the forecast.
double run(std::span<const double> z, SmoothingKind kind, const InitialState& init, double alpha, double beta,
           double gamma, int horizon, std::vector<double>* forecast) {
	double level = init.level;
	double trend = init.trend;
	std::vector<double> season = init.seasonal;
	const auto m = season.size();
	const bool has_trend = kind != SmoothingKind::Simple;
	const bool has_season = kind == SmoothingKind::HoltWinters;

	double sse = 0.0;
	for (std::size_t t = 0; t < z.size(); ++t) {
		const double s = has_season ? season[t % m] : 0.0;
		const double fitted = level + trend + s;
		const double err = z[t] - fitted;
		sse += err * err;
		const double prev = level;
		level = alpha * (z[t] - s) + (1.0 - alpha) * (level + trend);
		if (has_trend) {
			trend = beta * (level - prev) + (1.0 - beta) * trend;
		}
		if (has_season) {
			season[t % m] = gamma * (z[t] - level) + (1.0 - gamma) * s;
		}
	}
	if (forecast) {
		forecast->resize(static_cast<std::size_t>(horizon));
		for (int h = 1; h <= horizon; ++h) {
			const double s = has_season ? season[(z.size() + static_cast<std::size_t>(h) - 1) % m] : 0.0;
			(*forecast)[static_cast<std::size_t>(h - 1)] = level + h * trend + s;
		}
	}
	return sse / static_cast<double>(z.size());
}

} // namespace

SmoothingResult exponential_smoothing(std::span<const double> train, int horizon, SmoothingKind kind,
                                      const FitConfig& config) {
	const int period = config.seasonal_period;
	if (kind == SmoothingKind::HoltWinters) {
		if (train.size() < static_cast<std::size_t>(2 * period)) {
			throw DataError("holt-winters needs two seasons");
		}
	} else if (train.size() < 10) {
		throw DataError("exponential smoothing needs at least 10 observations");
	}

	SmoothingResult result;
	const detail::Standardizer st(train);
	if (st.constant) {
		result.forecast.assign(static_cast<std::size_t>(horizon), st.mean);
		return result;
	}
	const auto z = st.forward(train);
	const auto init = initial_state(z, kind, period);

	const std::size_t dim = kind == SmoothingKind::Simple ? 1 : (kind == SmoothingKind::Holt ? 2 : 3);
	std::vector<double> x0 = {0.3, 0.1, 0.1};
	x0.resize(dim);
	const numerics::Box box{std::vector<double>(dim, kLower), std::vector<double>(dim, kUpper)};
	auto objective = [&](std::span<const double> p) {
		return run(z, kind, init, p[0], dim > 1 ? p[1] : 0.0, dim > 2 ? p[2] : 0.0, 0, nullptr);
	};
	const auto opt = numerics::nelder_mead(objective, x0, box, config.optimizer_tol, config.optimizer_max_iter);

	result.alpha = opt.argmin[0];
	result.beta = dim > 1 ? opt.argmin[1] : 0.0;
	result.gamma = dim > 2 ? opt.argmin[2] : 0.0;
	result.converged = opt.converged;
	std::vector<double> fz;
	result.mse = run(z, kind, init, result.alpha, result.beta, result.gamma, horizon, &fz);
	result.forecast = st.backward(std::move(fz));
	return result;
}

std::vector<double> forecast_es(std::span<const double> train, int horizon, const FitConfig& config) {
	return exponential_smoothing(train, horizon, SmoothingKind::Simple, config).forecast;
}

std::vector<double> forecast_holt(std::span<const double> train, int horizon, const FitConfig& config) {
	return exponential_smoothing(train, horizon, SmoothingKind::Holt, config).forecast;
}

std::vector<double> forecast_hw(std::span<const double> train, int horizon, const FitConfig& config) {
	return exponential_smoothing(train, horizon, SmoothingKind::HoltWinters, config).forecast;
}

} // namespace pqf::models
