#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pqf::numerics {

/// Locally weighted polynomial regression with tricube weights.
///
/// Each evaluation point uses the `floor(span * n)` nearest observations;
/// the bandwidth is the distance to the farthest of them. `x` must be
/// strictly increasing. Evaluation points may lie outside the data range.
/// Throws std::invalid_argument on bad arguments or a degenerate window.
std::vector<double> loess(std::span<const double> x, std::span<const double> y, double span, int degree,
                          std::span<const double> eval_points);

namespace detail {

/// Weighted local polynomial fit at `x0` over observations [lo, hi).
/// Weights are tricube(|x - x0| / bandwidth) times `extra_weights` (when
/// nonempty). Falls back to a lower degree when the weighted design is rank
/// deficient. Returns false when every weight is zero.
bool local_fit(std::span<const double> x, std::span<const double> y, std::span<const double> extra_weights,
               std::size_t lo, std::size_t hi, double x0, double bandwidth, int degree, double& out);

} // namespace detail

} // namespace pqf::numerics
