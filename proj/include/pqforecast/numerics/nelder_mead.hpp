#pragma once

#include <functional>
#include <span>
#include <vector>

namespace pqf::numerics {

struct OptimizerResult {
	std::vector<double> argmin;
	double objective_value = 0.0;
	int iterations = 0;
	bool converged = false;
};

struct Box {
	std::vector<double> lower;
	std::vector<double> upper;
};

using Objective = std::function<double(std::span<const double>)>;

/// Box-bounded Nelder-Mead simplex minimizer.
///
/// The initial simplex is x0 plus a 5 % perturbation of each coordinate in
/// turn (0.00025 for zero coordinates). Proposals leaving the box are
/// reflected back into it. Non-finite objective values count as +inf.
/// Converges when the simplex diameter (max-norm) or the spread of objective
/// values drops below `tol`; otherwise stops at `max_iter` with
/// converged = false. Deterministic for identical inputs.
OptimizerResult nelder_mead(const Objective& objective, std::vector<double> x0, const Box& bounds, double tol = 1e-8,
                            int max_iter = 2000);

} // namespace pqf::numerics
