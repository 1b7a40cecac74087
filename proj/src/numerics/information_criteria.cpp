#include "pqforecast/numerics/information_criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pqf::numerics {

double aicc(double log_likelihood, int n_params, int n_obs) {
	const double k = n_params + 1.0;
	const double denom = n_obs - k - 1.0;
	if (n_obs <= n_params + 1 || denom <= 0.0) {
		return std::numeric_limits<double>::infinity();
	}
	return -2.0 * log_likelihood + 2.0 * k + 2.0 * k * (k + 1.0) / denom;
}

double css_log_likelihood(double sum_of_squares, int n_obs) {
	const double n = n_obs;
	const double sigma2 = sum_of_squares / n;
	return -0.5 * n * (std::log(2.0 * std::numbers::pi * sigma2) + 1.0);
}

} // namespace pqf::numerics
