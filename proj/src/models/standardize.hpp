#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

namespace pqf::models::detail {

// Affine map to zero mean and unit variance. Fits run on the standardized
// series so that estimates are invariant to shifting and scaling the data.
struct Standardizer {
	double mean = 0.0;
	double scale = 1.0;
	bool constant = false;

	explicit Standardizer(std::span<const double> y) {
		mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
		constant = std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); });
		if (constant) {
			mean = y.front();
		} else {
			double ss = 0.0;
			for (double v : y) {
				ss += (v - mean) * (v - mean);
			}
			scale = std::sqrt(ss / static_cast<double>(y.size()));
			if (!(scale > 0.0)) {
				constant = true;
				scale = 1.0;
			}
		}
	}

	std::vector<double> forward(std::span<const double> y) const {
		std::vector<double> z(y.size());
		for (std::size_t i = 0; i < y.size(); ++i) {
			z[i] = (y[i] - mean) / scale;
		}
		return z;
	}

	std::vector<double> backward(std::vector<double> z) const {
		for (auto& v : z) {
			v = mean + scale * v;
		}
		return z;
	}
};

} // namespace pqf::models::detail
