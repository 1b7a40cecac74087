#include "pqforecast/numerics/stl.hpp"

#include "pqforecast/numerics/loess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pqf::numerics {

namespace {

int next_odd(double v) {
	auto k = static_cast<int>(std::ceil(v));
	return k % 2 == 0 ? k + 1 : k;
}

struct Windows {
	int seasonal;
	int trend;
	int lowpass;
};

Windows resolve_windows(const StlConfig& c, int n) {
	Windows w{};
	w.seasonal = c.seasonal_window > 0 ? c.seasonal_window : (c.periodic ? 10 * n + 1 : 7);
	w.seasonal = std::max(3, w.seasonal | 1);
	w.trend = c.trend_window > 0 ? std::max(3, c.trend_window | 1)
	                             : next_odd(1.5 * c.period / (1.0 - 1.5 / static_cast<double>(w.seasonal)));
	w.lowpass = c.lowpass_window > 0 ? std::max(3, c.lowpass_window | 1) : next_odd(c.period);
	return w;
}

// Loess smoother on positions 0..n-1 with a window of `len` points, evaluated
// at position `xs` (which may lie one step outside the range). Window placement
// and bandwidth follow the original STL Fortran.
double smooth_at(std::span<const double> pos, std::span<const double> y, std::span<const double> rw, int len,
                 int degree, double xs) {
	const int n = static_cast<int>(y.size());
	int left = 0;
	int right = n - 1;
	double extra = 0.0;
	if (len >= n) {
		extra = static_cast<double>((len - n) / 2);
	} else {
		const int half = (len - 1) / 2;
		const int centre = static_cast<int>(std::lround(std::clamp(xs, 0.0, static_cast<double>(n - 1))));
		left = std::clamp(centre - half, 0, n - len);
		right = left + len - 1;
	}
	const double h = std::max(xs - left, right - xs) + extra;
	double out = 0.0;
	if (!detail::local_fit(pos, y, rw, static_cast<std::size_t>(left), static_cast<std::size_t>(right + 1), xs, h,
	                       degree, out)) {
		// No usable weights: keep the observation itself (or the nearest one).
		out = y[static_cast<std::size_t>(std::clamp(static_cast<int>(std::lround(xs)), 0, n - 1))];
	}
	return out;
}

std::vector<double> smooth_series(std::span<const double> y, std::span<const double> rw, int len, int degree) {
	std::vector<double> pos(y.size());
	std::iota(pos.begin(), pos.end(), 0.0);
	std::vector<double> out(y.size());
	for (std::size_t i = 0; i < y.size(); ++i) {
		out[i] = smooth_at(pos, y, rw, len, degree, static_cast<double>(i));
	}
	return out;
}

std::vector<double> moving_average(std::span<const double> x, int len) {
	const auto n = x.size() - static_cast<std::size_t>(len) + 1;
	std::vector<double> out(n);
	double sum = std::accumulate(x.begin(), x.begin() + len, 0.0);
	out[0] = sum / len;
	for (std::size_t i = 1; i < n; ++i) {
		sum += x[i + static_cast<std::size_t>(len) - 1] - x[i - 1];
		out[i] = sum / len;
	}
	return out;
}

// Smooths each cycle-subseries and extends it by one point at both ends.
// Result has length n + 2 * period.
std::vector<double> cycle_subseries(std::span<const double> detrended, std::span<const double> rw, int period,
                                    const StlConfig& c, int seasonal_window) {
	const auto n = static_cast<int>(detrended.size());
	std::vector<double> out(static_cast<std::size_t>(n + 2 * period));
	std::vector<double> sub, sub_rw, pos;
	for (int k = 0; k < period; ++k) {
		sub.clear();
		sub_rw.clear();
		for (int i = k; i < n; i += period) {
			sub.push_back(detrended[static_cast<std::size_t>(i)]);
			sub_rw.push_back(rw[static_cast<std::size_t>(i)]);
		}
		const int m = static_cast<int>(sub.size());
		std::vector<double> smoothed(static_cast<std::size_t>(m + 2));
		if (c.periodic) {
			double sw = 0.0, s = 0.0;
			for (int j = 0; j < m; ++j) {
				sw += sub_rw[static_cast<std::size_t>(j)];
				s += sub_rw[static_cast<std::size_t>(j)] * sub[static_cast<std::size_t>(j)];
			}
			const double mean = sw > 0.0 ? s / sw : std::accumulate(sub.begin(), sub.end(), 0.0) / m;
			std::fill(smoothed.begin(), smoothed.end(), mean);
		} else {
			pos.resize(static_cast<std::size_t>(m));
			std::iota(pos.begin(), pos.end(), 0.0);
			for (int j = -1; j <= m; ++j) {
				smoothed[static_cast<std::size_t>(j + 1)] =
				    smooth_at(pos, sub, sub_rw, seasonal_window, c.seasonal_degree, static_cast<double>(j));
			}
		}
		for (int j = 0; j < m + 2; ++j) {
			out[static_cast<std::size_t>(j * period + k)] = smoothed[static_cast<std::size_t>(j)];
		}
	}
	return out;
}

std::vector<double> robustness_weights(std::span<const double> y, std::span<const double> fit) {
	const auto n = y.size();
	std::vector<double> r(n);
	for (std::size_t i = 0; i < n; ++i) {
		r[i] = std::abs(y[i] - fit[i]);
	}
	std::vector<double> sorted = r;
	const auto mid = n / 2;
	std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(mid), sorted.end());
	double median = sorted[mid];
	if (n % 2 == 0) {
		median = 0.5 * (median + *std::max_element(sorted.begin(), sorted.begin() + static_cast<long>(mid)));
	}
	const double cmad = 6.0 * median;
	const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
	std::vector<double> w(n, 1.0);
	if (!(cmad > 1e-10 * (*hi - *lo))) {
		return w;
	}
	for (std::size_t i = 0; i < n; ++i) {
		const double u = r[i] / cmad;
		if (u <= 0.001) {
			w[i] = 1.0;
		} else if (u <= 0.999) {
			const double t = 1.0 - u * u;
			w[i] = t * t;
		} else {
			w[i] = 0.0;
		}
	}
	return w;
}

} // namespace

Decomposition stl_decompose(std::span<const double> y, const StlConfig& config) {
	const int period = config.period;
	if (period < 2) {
		throw std::invalid_argument("stl: period must be at least 2");
	}
	const int n = static_cast<int>(y.size());
	if (n < 2 * period) {
		throw std::invalid_argument("stl: series shorter than two periods");
	}
	for (double v : y) {
		if (!std::isfinite(v)) {
			throw std::invalid_argument("stl: non-finite input");
		}
	}
	const Windows win = resolve_windows(config, n);
	const auto un = static_cast<std::size_t>(n);

	std::vector<double> trend(un, 0.0);
	std::vector<double> seasonal(un, 0.0);
	std::vector<double> rw(un, 1.0);
	std::vector<double> work(un);

	for (int outer = 0; outer <= config.outer_iterations; ++outer) {
		for (int inner = 0; inner < config.inner_iterations; ++inner) {
			for (std::size_t i = 0; i < un; ++i) {
				work[i] = y[i] - trend[i];
			}
			const auto c = cycle_subseries(work, rw, period, config, win.seasonal);
			auto low = moving_average(c, period);
			low = moving_average(low, period);
			low = moving_average(low, 3);
			const std::vector<double> ones(low.size(), 1.0);
			low = smooth_series(low, ones, win.lowpass, config.lowpass_degree);
			for (std::size_t i = 0; i < un; ++i) {
				seasonal[i] = c[i + static_cast<std::size_t>(period)] - low[i];
				work[i] = y[i] - seasonal[i];
			}
			trend = smooth_series(work, rw, win.trend, config.trend_degree);
		}
		if (outer < config.outer_iterations) {
			for (std::size_t i = 0; i < un; ++i) {
				work[i] = trend[i] + seasonal[i];
			}
			rw = robustness_weights(y, work);
		}
	}

	Decomposition d;
	d.period = period;
	d.remainder.resize(un);
	for (std::size_t i = 0; i < un; ++i) {
		d.remainder[i] = y[i] - trend[i] - seasonal[i];
	}
	d.trend = std::move(trend);
	d.seasonal = std::move(seasonal);
	return d;
}

} // namespace pqf::numerics
