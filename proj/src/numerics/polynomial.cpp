#include "pqforecast/numerics/polynomial.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace pqf::numerics {

bool roots_outside(std::span<const double> coefficients, double radius) {
	auto degree = coefficients.size();
	while (degree > 0 && coefficients[degree - 1] == 0.0) {
		--degree;
	}
	if (degree == 0) {
		return true;
	}
	if (degree == 1) {
		// 1 + c z has its root at -1/c.
		return std::abs(coefficients[0]) * radius < 1.0;
	}
	// Eigenvalues of the companion matrix of z^k + c1 z^(k-1) + ... + ck are the
	// reciprocals of the roots.
	const auto k = static_cast<Eigen::Index>(degree);
	Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
	for (Eigen::Index j = 0; j < k; ++j) {
		companion(0, j) = -coefficients[static_cast<std::size_t>(j)];
	}
	for (Eigen::Index i = 1; i < k; ++i) {
		companion(i, i - 1) = 1.0;
	}
	Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
	if (solver.info() != Eigen::Success) {
		return false;
	}
	for (Eigen::Index i = 0; i < k; ++i) {
		if (std::abs(solver.eigenvalues()(i)) * radius >= 1.0) {
			return false;
		}
	}
	return true;
}

} // namespace pqf::numerics
