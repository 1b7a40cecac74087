#pragma once

#include <string>
#include <vector>

namespace pqf::models {

inline constexpr int kHorizon = 52;

/// Point forecast for one series. `producer` is a model name such as
/// "STL-ARIMA" or an ensemble label such as "D28:median".
struct Forecast {
	std::string series_id;
	std::string producer;
	std::vector<double> values;

	int horizon() const { return static_cast<int>(values.size()); }
};

/// Raw model output before the nonnegativity clamp.
struct ModelOutput {
	std::vector<double> values;
	std::vector<std::string> warnings;
};

} // namespace pqf::models
