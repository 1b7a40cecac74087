#include "pqforecast/models/prophet_like.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/numerics/least_squares.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pqf::models {

std::vector<double> changepoint_times(int n, const ProphetConfig& config) {
	std::vector<double> out;
	const int history = static_cast<int>(std::floor(config.changepoint_range * n));
	if (config.changepoints <= 0 || history < 2 || n < 2) {
		return out;
	}
	const double last = history - 1;
	for (int j = 1; j <= config.changepoints; ++j) {
		const double idx = std::round(last * j / config.changepoints);
		out.push_back(idx / (n - 1));
	}
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

namespace {

Eigen::MatrixXd design(int rows, int first_index, int n, std::span<const double> cps, int order, int period) {
	const auto cols = 2 + static_cast<Eigen::Index>(cps.size()) + 2 * order;
	Eigen::MatrixXd x(rows, cols);
	for (int r = 0; r < rows; ++r) {
		const int i = first_index + r;
		const double t = static_cast<double>(i) / (n - 1);
		Eigen::Index c = 0;
		x(r, c++) = 1.0;
		x(r, c++) = t;
		for (double s : cps) {
			x(r, c++) = std::max(0.0, t - s);
		}
		for (int k = 1; k <= order; ++k) {
			const double arg = 2.0 * std::numbers::pi * k * i / period;
			x(r, c++) = std::sin(arg);
			x(r, c++) = std::cos(arg);
		}
	}
	return x;
}

} // namespace

std::vector<double> forecast_prophet_like(std::span<const double> train, int horizon, const ProphetConfig& config,
                                          int period) {
	const int n = static_cast<int>(train.size());
	if (n < 3) {
		throw DataError("prophet-like: needs at least three observations");
	}
	const auto cps = changepoint_times(n, config);
	// Fourier terms beyond the Nyquist limit would duplicate columns.
	const int order = std::clamp(config.fourier_order, 0, (period - 1) / 2);
	const auto x = design(n, 0, n, cps, order, period);
	Eigen::VectorXd y(n);
	for (int i = 0; i < n; ++i) {
		y(i) = train[static_cast<std::size_t>(i)];
	}
	std::vector<double> penalties(static_cast<std::size_t>(x.cols()), 0.0);
	for (std::size_t j = 0; j < cps.size(); ++j) {
		penalties[2 + j] = config.changepoint_ridge;
	}
	const Eigen::VectorXd beta = numerics::least_squares(x, y, penalties);
	const Eigen::VectorXd f = design(horizon, n, n, cps, order, period) * beta;
	return std::vector<double>(f.data(), f.data() + f.size());
}

} // namespace pqf::models
