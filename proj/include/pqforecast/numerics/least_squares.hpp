#pragma once

#include <Eigen/Dense>

#include <span>

namespace pqf::numerics {

/// Minimizes ||y - X b||^2 + ridge * ||b||^2 by column-pivoted QR on the
/// ridge-augmented system. Throws std::runtime_error("singular system") when
/// the augmented design is rank deficient (only possible with ridge = 0).
Eigen::VectorXd least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y, double ridge);

/// Same with a separate nonnegative penalty per coefficient, so that only
/// some terms are shrunk: minimizes ||y - X b||^2 + sum_j penalty_j * b_j^2.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                              std::span<const double> penalties);

} // namespace pqf::numerics
