#pragma once

#include <span>
#include <string_view>

namespace pqf::evaluation {

/// Mean absolute error. Throws std::invalid_argument on length mismatch or
/// empty input.
double mae(std::span<const double> actual, std::span<const double> forecast);

/// Symmetric MAPE in percent, bounded to [0, 200]. A term with
/// actual = forecast = 0 contributes 0.
double smape(std::span<const double> actual, std::span<const double> forecast);

enum class SmapeClass { Good, Acceptable, Poor };

/// good: < 10, acceptable: 10..25 inclusive, poor: > 25.
SmapeClass classify_smape(double value);
std::string_view name(SmapeClass c);

/// Ratio of a producer's mean sMAPE to the benchmark's; < 1 beats the benchmark.
/// Throws std::invalid_argument for a nonpositive benchmark.
double benchmark_ratio(double mean_smape, double benchmark_mean_smape);

} // namespace pqf::evaluation
