#include "pqforecast/models/sarima.hpp"

#include "standardize.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/models/baseline.hpp"
#include "pqforecast/numerics/differencing.hpp"
#include "pqforecast/numerics/information_criteria.hpp"
#include "pqforecast/numerics/nelder_mead.hpp"
#include "pqforecast/numerics/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pqf::models {

namespace {

constexpr double kRootRadius = 1.001;
constexpr double kVarianceFloor = 1e-10;

struct Lag {
	int lag;
	double coef;
};

// Lag coefficients of the product of a regular and a seasonal factor, in the
// prediction convention x_t = sum c_L x_{t-L}. `sign` = -1 for AR factors
// (1 - sum a B)(1 - sum A B^s), +1 for MA factors (1 + sum a B)(1 + sum A B^s).
std::vector<Lag> expand(std::span<const double> regular, std::span<const double> seasonal, int period,
                        double sign) {
	std::map<int, double> terms;
	for (std::size_t i = 0; i < regular.size(); ++i) {
		terms[static_cast<int>(i) + 1] += regular[i];
	}
	for (std::size_t j = 0; j < seasonal.size(); ++j) {
		terms[period * (static_cast<int>(j) + 1)] += seasonal[j];
	}
	for (std::size_t i = 0; i < regular.size(); ++i) {
		for (std::size_t j = 0; j < seasonal.size(); ++j) {
			// AR: the cross term phi_i Phi_j enters with a minus sign.
			terms[static_cast<int>(i) + 1 + period * (static_cast<int>(j) + 1)] += sign * regular[i] * seasonal[j];
		}
	}
	std::vector<Lag> out;
	for (const auto& [lag, coef] : terms) {
		out.push_back({lag, coef});
	}
	return out;
}

struct Params {
	std::vector<double> ar, ma, sar, sma;
	double mean = 0.0;
};

Params unpack(const SarimaOrder& o, std::span<const double> x) {
	Params p;
	std::size_t k = 0;
	auto take = [&](int count, std::vector<double>& dst) {
		dst.assign(x.begin() + static_cast<long>(k), x.begin() + static_cast<long>(k) + count);
		k += static_cast<std::size_t>(count);
	};
	take(o.p, p.ar);
	take(o.q, p.ma);
	take(o.P, p.sar);
	take(o.Q, p.sma);
	if (o.constant) {
		p.mean = x[k];
	}
	return p;
}

bool admissible(const SarimaOrder& o, const Params& p) {
	std::vector<double> neg(p.ar.size());
	for (std::size_t i = 0; i < p.ar.size(); ++i) {
		neg[i] = -p.ar[i];
	}
	std::vector<double> sneg(p.sar.size());
	for (std::size_t i = 0; i < p.sar.size(); ++i) {
		sneg[i] = -p.sar[i];
	}
	// Seasonal factors are polynomials in z^period: |z| > r  <=>  |z^period| > r^period.
	const double seasonal_radius = std::pow(kRootRadius, o.period);
	return numerics::roots_outside(neg, kRootRadius) && numerics::roots_outside(p.ma, kRootRadius) &&
	       numerics::roots_outside(sneg, seasonal_radius) && numerics::roots_outside(p.sma, seasonal_radius);
}

// Residuals of the ARMA recursion; entries before the conditioning point stay 0.
double css(std::span<const double> w, int condition, const std::vector<Lag>& ar, const std::vector<Lag>& ma,
           double mean, std::vector<double>& resid) {
	const int n = static_cast<int>(w.size());
	resid.assign(w.size(), 0.0);
	double sum = 0.0;
	for (int t = condition; t < n; ++t) {
		double pred = mean;
		for (const auto& [lag, c] : ar) {
			if (t - lag >= 0) {
				pred += c * (w[static_cast<std::size_t>(t - lag)] - mean);
			}
		}
		for (const auto& [lag, c] : ma) {
			if (t - lag >= 0) {
				pred += c * resid[static_cast<std::size_t>(t - lag)];
			}
		}
		const double e = w[static_cast<std::size_t>(t)] - pred;
		resid[static_cast<std::size_t>(t)] = e;
		sum += e * e;
	}
	return sum;
}

} // namespace

std::string to_string(const SarimaOrder& o) {
	std::string s = "(" + std::to_string(o.p) + "," + std::to_string(o.d) + "," + std::to_string(o.q) + ")";
	if (o.P + o.D + o.Q > 0) {
		s += "(" + std::to_string(o.P) + "," + std::to_string(o.D) + "," + std::to_string(o.Q) + ")[" +
		     std::to_string(o.period) + "]";
	}
	if (o.constant) {
		s += "+c";
	}
	return s;
}

SarimaFit fit_sarima(std::span<const double> y, const SarimaOrder& order, const FitConfig& config) {
	if (order.p < 0 || order.q < 0 || order.P < 0 || order.Q < 0 || order.d < 0 || order.D < 0 || order.period < 1) {
		throw std::invalid_argument("sarima: negative order");
	}
	const detail::Standardizer st(y);
	if (st.constant) {
		throw DataError("sarima: constant series");
	}
	const long lost = order.d + static_cast<long>(order.period) * order.D;
	if (static_cast<long>(y.size()) - lost <= order.p + 2) {
		throw DataError("sarima: series too short for " + to_string(order));
	}

	SarimaFit fit;
	fit.order = order;
	fit.z_mean = st.mean;
	fit.z_scale = st.scale;
	const auto z = st.forward(y);
	auto regular = numerics::difference(z, 1, order.d);
	auto seasonal = numerics::difference(regular.values, order.period, order.D);
	fit.heads_regular = std::move(regular.heads);
	fit.heads_seasonal = std::move(seasonal.heads);
	fit.w = std::move(seasonal.values);
	const auto& w = fit.w;
	const double w_avg = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());

	const int n_coef = order.p + order.q + order.P + order.Q;
	const int n_params = n_coef + (order.constant ? 1 : 0);
	fit.n_obs = static_cast<int>(w.size()) - order.p;

	std::vector<double> x0, lo, hi;
	auto add = [&](int count, double bound0, double bound1) {
		for (int i = 0; i < count; ++i) {
			x0.push_back(0.1);
			const double b = i == 0 ? bound0 : bound1;
			lo.push_back(-b);
			hi.push_back(b);
		}
	};
	add(order.p, 2.0, 1.0);
	add(order.q, 2.0, 1.0);
	add(order.P, 1.0, 1.0);
	add(order.Q, 1.0, 1.0);
	if (order.constant) {
		x0.push_back(w_avg);
		lo.push_back(-10.0);
		hi.push_back(10.0);
	}

	std::vector<double> resid;
	auto evaluate = [&](std::span<const double> x) {
		const Params p = unpack(order, x);
		if (!admissible(order, p)) {
			return std::numeric_limits<double>::infinity();
		}
		const auto ar = expand(p.ar, p.sar, order.period, -1.0);
		const auto ma = expand(p.ma, p.sma, order.period, 1.0);
		return css(w, order.p, ar, ma, p.mean, resid);
	};

	std::vector<double> best = x0;
	if (!x0.empty()) {
		const auto opt = numerics::nelder_mead(evaluate, x0, numerics::Box{lo, hi}, config.optimizer_tol,
		                                       config.optimizer_max_iter);
		best = opt.argmin;
		fit.converged = opt.converged;
	} else {
		fit.converged = true;
	}

	const Params p = unpack(order, best);
	fit.ar = p.ar;
	fit.ma = p.ma;
	fit.seasonal_ar = p.sar;
	fit.seasonal_ma = p.sma;
	fit.w_mean = p.mean;
	fit.css = evaluate(best);
	fit.residuals = resid;
	fit.intercept = order.constant ? st.mean + st.scale * p.mean : 0.0;

	const double floor_ss = kVarianceFloor * fit.n_obs;
	const double ll = numerics::css_log_likelihood(std::max(fit.css, floor_ss), fit.n_obs);
	fit.aicc = numerics::aicc(ll, n_params, fit.n_obs);
	fit.score = fit.aicc / fit.n_obs;
	return fit;
}

std::vector<double> sarima_forecast(const SarimaFit& fit, int horizon) {
	const auto& o = fit.order;
	const auto ar = expand(fit.ar, fit.seasonal_ar, o.period, -1.0);
	const auto ma = expand(fit.ma, fit.seasonal_ma, o.period, 1.0);
	const auto n = static_cast<long>(fit.w.size());
	std::vector<double> w = fit.w;
	std::vector<double> e = fit.residuals;
	w.resize(w.size() + static_cast<std::size_t>(horizon));
	e.resize(w.size(), 0.0);
	for (long t = n; t < n + horizon; ++t) {
		double pred = fit.w_mean;
		for (const auto& [lag, c] : ar) {
			if (t - lag >= 0) {
				pred += c * (w[static_cast<std::size_t>(t - lag)] - fit.w_mean);
			}
		}
		for (const auto& [lag, c] : ma) {
			if (t - lag >= 0) {
				pred += c * e[static_cast<std::size_t>(t - lag)];
			}
		}
		w[static_cast<std::size_t>(t)] = pred;
	}
	auto level = numerics::invert_difference(fit.heads_seasonal, w, o.period);
	level = numerics::invert_difference(fit.heads_regular, level, 1);
	std::vector<double> out(level.end() - horizon, level.end());
	for (auto& v : out) {
		v = fit.z_mean + fit.z_scale * v;
	}
	return out;
}

std::vector<SarimaOrder> candidate_orders(const ArimaSearch& s, int n, int period) {
	std::vector<SarimaOrder> out;
	for (int D = 0; D <= s.max_D; ++D) {
		for (int d = 0; d <= s.max_d; ++d) {
			if (n - d - period * D < s.min_length_after_diff) {
				continue;
			}
			for (int P = 0; P <= s.max_P; ++P) {
				for (int Q = 0; Q <= s.max_Q; ++Q) {
					for (int p = 0; p <= s.max_p; ++p) {
						for (int q = 0; q <= s.max_q; ++q) {
							if (p + q + P + Q > s.max_arma_terms) {
								continue;
							}
							out.push_back({p, d, q, P, D, Q, period, d + D == 0});
						}
					}
				}
			}
		}
	}
	return out;
}

int seasonal_differences(std::span<const double> y, int period) {
	const auto n = static_cast<std::ptrdiff_t>(y.size());
	if (period < 2 || n - period < 2) {
		return 0;
	}
	auto variance = [](const std::vector<double>& v) {
		const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
		double ss = 0.0;
		for (double x : v) {
			ss += (x - mean) * (x - mean);
		}
		return ss / static_cast<double>(v.size() - 1);
	};
	const std::vector<double> level(y.begin(), y.end());
	std::vector<double> diffed;
	for (std::ptrdiff_t t = period; t < n; ++t) {
		diffed.push_back(y[static_cast<std::size_t>(t)] - y[static_cast<std::size_t>(t - period)]);
	}
	return variance(diffed) < variance(level) ? 1 : 0;
}

ArimaSelection auto_arima(std::span<const double> y, int horizon, const ArimaSearch& search, int period,
                          const FitConfig& config) {
	ArimaSelection sel;
	if (y.empty()) {
		throw DataError("arima: empty series");
	}
	const detail::Standardizer st(y);
	if (st.constant) {
		sel.forecast.assign(static_cast<std::size_t>(horizon), st.mean);
		return sel;
	}
	const int seasonal_d = search.max_D >= 1 ? seasonal_differences(y, period) : 0;
	const auto candidates = candidate_orders(search, static_cast<int>(y.size()), period);
	auto search_pass = [&](bool gated) {
		for (const auto& order : candidates) {
			if ((order.D == seasonal_d) != gated) {
				continue;
			}
			SarimaFit fit;
			try {
				fit = fit_sarima(y, order, config);
			} catch (const DataError&) {
				continue;
			}
			if (!std::isfinite(fit.score)) {
				continue;
			}
			if (!sel.best || fit.score < sel.best->score) {
				sel.best = std::move(fit);
			}
		}
	};
	search_pass(true);
	if (!sel.best) {
		search_pass(false);
	}
	if (sel.best) {
		sel.forecast = sarima_forecast(*sel.best, horizon);
		bool finite = true;
		for (double v : sel.forecast) {
			finite = finite && std::isfinite(v);
		}
		if (!finite) {
			sel.best.reset();
			sel.forecast.clear();
			sel.warnings.push_back("non-finite ARIMA forecast");
		}
	}
	return sel;
}

ModelOutput forecast_sarima(std::span<const double> train, int horizon, const FitConfig& config) {
	auto sel = auto_arima(train, horizon, config.sarima, config.seasonal_period, config);
	ModelOutput out;
	out.warnings = std::move(sel.warnings);
	if (sel.forecast.empty()) {
		out.warnings.push_back("no admissible SARIMA order; fell back to SNaive");
		out.values = forecast_snaive(train, horizon, config.seasonal_period);
	} else {
		out.values = std::move(sel.forecast);
	}
	return out;
}

ModelOutput forecast_arima(std::span<const double> train, int horizon, const FitConfig& config) {
	auto sel = auto_arima(train, horizon, config.stl_arima, config.seasonal_period, config);
	ModelOutput out;
	out.warnings = std::move(sel.warnings);
	if (sel.forecast.empty()) {
		out.warnings.push_back("no admissible ARIMA order; fell back to Naive");
		out.values = forecast_naive(train, horizon);
	} else {
		out.values = std::move(sel.forecast);
	}
	return out;
}

} // namespace pqf::models
