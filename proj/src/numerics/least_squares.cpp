#include "pqforecast/numerics/least_squares.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pqf::numerics {

Eigen::VectorXd least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y, double ridge) {
	if (!(ridge >= 0.0)) {
		throw std::invalid_argument("least_squares: ridge must be nonnegative");
	}
	const std::vector<double> penalties(static_cast<std::size_t>(design.cols()), ridge);
	return least_squares(design, y, penalties);
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                              std::span<const double> penalties) {
	const auto rows = design.rows();
	const auto cols = design.cols();
	if (rows != y.size()) {
		throw std::invalid_argument("least_squares: design rows differ from observations");
	}
	if (static_cast<Eigen::Index>(penalties.size()) != cols) {
		throw std::invalid_argument("least_squares: one penalty per coefficient required");
	}
	Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows + cols, cols);
	Eigen::VectorXd b = Eigen::VectorXd::Zero(rows + cols);
	a.topRows(rows) = design;
	b.head(rows) = y;
	for (Eigen::Index j = 0; j < cols; ++j) {
		const double p = penalties[static_cast<std::size_t>(j)];
		if (!(p >= 0.0)) {
			throw std::invalid_argument("least_squares: penalties must be nonnegative");
		}
		a(rows + j, j) = std::sqrt(p);
	}
	Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
	qr.setThreshold(1e-12);
	if (qr.rank() < cols) {
		throw std::runtime_error("singular system");
	}
	return qr.solve(b);
}

} // namespace pqf::numerics
