#pragma once

#include <span>
#include <vector>

namespace pqf::evaluation {

/// Ranks scores ascending (1 = lowest); tied scores share the average of the
/// positions they occupy.
std::vector<double> rank_within_series(std::span<const double> scores);

} // namespace pqf::evaluation
