#include "pqforecast/numerics/loess.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pqf::numerics {

namespace detail {

namespace {

double tricube(double u) {
	const double t = 1.0 - u * u * u;
	return t * t * t;
}

} // namespace

bool local_fit(std::span<const double> x, std::span<const double> y, std::span<const double> extra_weights,
               std::size_t lo, std::size_t hi, double x0, double bandwidth, int degree, double& out) {
	const auto m = static_cast<Eigen::Index>(hi - lo);
	Eigen::VectorXd w(m);
	double total = 0.0;
	const double h = bandwidth > 0.0 ? bandwidth : 1.0;
	for (std::size_t j = lo; j < hi; ++j) {
		const double r = std::abs(x[j] - x0);
		double wj = 0.0;
		if (r <= 0.001 * h) {
			wj = 1.0;
		} else if (r <= 0.999 * h) {
			wj = tricube(r / h);
		}
		if (!extra_weights.empty()) {
			wj *= extra_weights[j];
		}
		w(static_cast<Eigen::Index>(j - lo)) = wj;
		total += wj;
	}
	if (!(total > 0.0)) {
		return false;
	}

	for (int d = degree; d >= 0; --d) {
		Eigen::MatrixXd a(m, d + 1);
		Eigen::VectorXd b(m);
		for (Eigen::Index i = 0; i < m; ++i) {
			const double sw = std::sqrt(w(i));
			const double u = (x[lo + static_cast<std::size_t>(i)] - x0) / h;
			double p = 1.0;
			for (int k = 0; k <= d; ++k) {
				a(i, k) = sw * p;
				p *= u;
			}
			b(i) = sw * y[lo + static_cast<std::size_t>(i)];
		}
		Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
		qr.setThreshold(1e-10);
		if (qr.rank() == d + 1 || d == 0) {
			out = qr.solve(b)(0);
			return true;
		}
	}
	return false;
}

} // namespace detail

std::vector<double> loess(std::span<const double> x, std::span<const double> y, double span, int degree,
                          std::span<const double> eval_points) {
	if (x.size() != y.size()) {
		throw std::invalid_argument("loess: x and y differ in length");
	}
	if (!(span > 0.0 && span <= 1.0)) {
		throw std::invalid_argument("loess: span must lie in (0, 1]");
	}
	if (degree < 0 || degree > 2) {
		throw std::invalid_argument("loess: degree must be 0, 1 or 2");
	}
	for (std::size_t i = 1; i < x.size(); ++i) {
		if (!(x[i] > x[i - 1])) {
			throw std::invalid_argument("loess: x must be strictly increasing");
		}
	}
	const auto n = x.size();
	const auto q = static_cast<std::size_t>(std::floor(span * static_cast<double>(n)));
	if (q < static_cast<std::size_t>(degree + 1) || q == 0) {
		throw std::invalid_argument("loess: span leaves fewer than degree + 1 points per window");
	}

	std::vector<double> out;
	out.reserve(eval_points.size());
	std::vector<double> dist(n);
	for (double x0 : eval_points) {
		// The q nearest points form a contiguous block of the sorted x.
		std::size_t lo = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), x0) - x.begin());
		std::size_t hi = lo;
		while (hi - lo < q) {
			if (lo == 0) {
				++hi;
			} else if (hi == n) {
				--lo;
			} else if (x0 - x[lo - 1] <= x[hi] - x0) {
				--lo;
			} else {
				++hi;
			}
		}
		const double bandwidth = std::max(x0 - x[lo], x[hi - 1] - x0);
		double value = 0.0;
		if (!detail::local_fit(x, y, {}, lo, hi, x0, bandwidth, degree, value)) {
			throw std::invalid_argument("loess: degenerate window (all weights zero)");
		}
		out.push_back(value);
	}
	return out;
}

} // namespace pqf::numerics
