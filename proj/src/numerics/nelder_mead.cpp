#include "pqforecast/numerics/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pqf::numerics {

namespace {

struct Vertex {
	std::vector<double> x;
	double f;
};

double into_box(double v, double lo, double hi) {
	if (v < lo) {
		v = lo + (lo - v);
	} else if (v > hi) {
		v = hi - (v - hi);
	}
	return std::clamp(v, lo, hi);
}

} // namespace

OptimizerResult nelder_mead(const Objective& objective, std::vector<double> x0, const Box& bounds, double tol,
                            int max_iter) {
	const auto d = x0.size();
	if (d == 0) {
		throw std::invalid_argument("nelder_mead: empty parameter vector");
	}
	if (bounds.lower.size() != d || bounds.upper.size() != d) {
		throw std::invalid_argument("nelder_mead: bounds dimension mismatch");
	}
	for (std::size_t i = 0; i < d; ++i) {
		if (!(bounds.lower[i] <= bounds.upper[i])) {
			throw std::invalid_argument("nelder_mead: empty box");
		}
		x0[i] = std::clamp(x0[i], bounds.lower[i], bounds.upper[i]);
	}

	auto eval = [&](const std::vector<double>& x) {
		const double f = objective(x);
		return std::isfinite(f) ? f : std::numeric_limits<double>::infinity();
	};
	auto project = [&](std::vector<double>& x) {
		for (std::size_t i = 0; i < d; ++i) {
			x[i] = into_box(x[i], bounds.lower[i], bounds.upper[i]);
		}
	};

	std::vector<Vertex> simplex;
	simplex.reserve(d + 1);
	simplex.push_back({x0, eval(x0)});
	if (!std::isfinite(simplex[0].f)) {
		throw std::invalid_argument("nelder_mead: objective not finite at x0");
	}
	for (std::size_t i = 0; i < d; ++i) {
		auto x = x0;
		const double step = x0[i] != 0.0 ? 0.05 * x0[i] : 0.00025;
		x[i] = x0[i] + step;
		if (x[i] > bounds.upper[i] || x[i] < bounds.lower[i]) {
			x[i] = x0[i] - step;
		}
		project(x);
		simplex.push_back({x, eval(x)});
	}

	OptimizerResult result;
	std::vector<double> centroid(d), trial(d);
	auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

	int iter = 0;
	for (;; ++iter) {
		std::stable_sort(simplex.begin(), simplex.end(), by_value);
		const auto& best = simplex.front();
		const auto& worst = simplex.back();
		double diameter = 0.0;
		for (std::size_t v = 1; v <= d; ++v) {
			for (std::size_t i = 0; i < d; ++i) {
				diameter = std::max(diameter, std::abs(simplex[v].x[i] - best.x[i]));
			}
		}
		const double spread = worst.f - best.f;
		if (diameter < tol) {
			result.converged = true;
			break;
		}
		if (std::isfinite(spread) && spread < tol) {
			// vertices straddling a minimum can have equal values; probe the centre
			std::fill(centroid.begin(), centroid.end(), 0.0);
			for (const auto& v : simplex) {
				for (std::size_t i = 0; i < d; ++i) {
					centroid[i] += v.x[i] / static_cast<double>(d + 1);
				}
			}
			const double fc = eval(centroid);
			if (!(fc < best.f - tol)) {
				result.converged = true;
				break;
			}
			if (iter >= max_iter) {
				break;
			}
			simplex.back() = Vertex{centroid, fc};
			continue;
		}
		if (iter >= max_iter) {
			break;
		}

		std::fill(centroid.begin(), centroid.end(), 0.0);
		for (std::size_t v = 0; v < d; ++v) {
			for (std::size_t i = 0; i < d; ++i) {
				centroid[i] += simplex[v].x[i] / static_cast<double>(d);
			}
		}
		auto along = [&](double t) {
			for (std::size_t i = 0; i < d; ++i) {
				trial[i] = centroid[i] + t * (simplex.back().x[i] - centroid[i]);
			}
			project(trial);
			return Vertex{trial, eval(trial)};
		};

		const Vertex reflected = along(-1.0);
		if (reflected.f < simplex.front().f) {
			const Vertex expanded = along(-2.0);
			simplex.back() = expanded.f < reflected.f ? expanded : reflected;
			continue;
		}
		if (reflected.f < simplex[d - 1].f) {
			simplex.back() = reflected;
			continue;
		}
		const bool outside = reflected.f < simplex.back().f;
		const Vertex contracted = along(outside ? -0.5 : 0.5);
		if (contracted.f < (outside ? reflected.f : simplex.back().f)) {
			simplex.back() = contracted;
			continue;
		}
		for (std::size_t v = 1; v <= d; ++v) {
			for (std::size_t i = 0; i < d; ++i) {
				simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
			}
			project(simplex[v].x);
			simplex[v].f = eval(simplex[v].x);
		}
	}

	result.argmin = simplex.front().x;
	result.objective_value = simplex.front().f;
	result.iterations = iter;
	return result;
}

} // namespace pqf::numerics
