#pragma once

#include <span>
#include <vector>

namespace pqf::numerics {

/// Result of applying (1 - B^lag)^times. `heads[k]` holds the first `lag`
/// values of the series before the (k+1)-th differencing pass, which is what
/// invert_difference needs to integrate back.
struct Differenced {
	std::vector<double> values;
	std::vector<std::vector<double>> heads;
	int lag = 1;
};

/// Throws std::invalid_argument unless lag >= 1, times >= 0 and
/// y.size() > lag * times.
Differenced difference(std::span<const double> y, int lag, int times);

/// Inverse of difference: rebuilds the original series from the retained
/// heads. `diffed` may be longer than the differenced series (e.g. with
/// forecasts appended); the output then extends accordingly.
std::vector<double> invert_difference(const std::vector<std::vector<double>>& heads, std::span<const double> diffed,
                                      int lag);

} // namespace pqf::numerics
