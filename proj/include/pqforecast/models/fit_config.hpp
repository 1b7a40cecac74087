#pragma once

#include "pqforecast/numerics/stl.hpp"

#include <cstdint>

namespace pqf::models {

/// Order search grid for (seasonal) ARIMA.
struct ArimaSearch {
	int max_p = 2;
	int max_d = 1;
	int max_q = 2;
	int max_P = 1;
	int max_D = 1;
	int max_Q = 1;
	int max_arma_terms = 4;        // p + q + P + Q
	int min_length_after_diff = 30;
};

struct ProphetConfig {
	int changepoints = 10;
	double changepoint_range = 0.8;
	int fourier_order = 6;
	double changepoint_ridge = 1.0;
};

struct FitConfig {
	int seasonal_period = 52;
	ArimaSearch sarima{};
	ArimaSearch stl_arima{2, 1, 2, 0, 0, 0, 4, 30};
	ProphetConfig prophet{};
	numerics::StlConfig stl{};
	double optimizer_tol = 1e-8;
	int optimizer_max_iter = 2000;
	// Reserved; every fit is deterministic.
	std::uint64_t rng_seed = 0;
};

} // namespace pqf::models
