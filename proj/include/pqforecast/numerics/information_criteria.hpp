#pragma once

namespace pqf::numerics {

/// Small-sample corrected AIC with the innovation variance counted as a
/// parameter: k = n_params + 1, AICc = -2 ll + 2k + 2k(k+1)/(n-k-1).
/// Returns +inf when n_obs is too small for the correction term.
double aicc(double log_likelihood, int n_params, int n_obs);

/// Gaussian log-likelihood implied by a residual sum of squares over n_obs
/// residuals (the conditional-sum-of-squares proxy).
double css_log_likelihood(double sum_of_squares, int n_obs);

} // namespace pqf::numerics
