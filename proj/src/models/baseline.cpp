#include "pqforecast/models/baseline.hpp"

#include "pqforecast/core/errors.hpp"

#include <string>

namespace pqf::models {

std::vector<double> forecast_naive(std::span<const double> train, int horizon) {
	if (train.empty()) {
		throw DataError("naive: empty training series");
	}
	return std::vector<double>(static_cast<std::size_t>(horizon), train.back());
}

std::vector<double> forecast_drift(std::span<const double> train, int horizon) {
	if (train.size() < 2) {
		throw DataError("drift: needs at least two observations");
	}
	const double last = train.back();
	const double slope = (last - train.front()) / static_cast<double>(train.size() - 1);
	std::vector<double> out(static_cast<std::size_t>(horizon));
	for (int h = 1; h <= horizon; ++h) {
		out[static_cast<std::size_t>(h - 1)] = last + h * slope;
	}
	return out;
}

std::vector<double> forecast_snaive(std::span<const double> train, int horizon, int period) {
	if (period < 1 || train.size() < static_cast<std::size_t>(period)) {
		throw DataError("snaive: training series shorter than one period (" + std::to_string(period) + ")");
	}
	const auto n = static_cast<long>(train.size());
	std::vector<double> out(static_cast<std::size_t>(horizon));
	for (long h = 1; h <= horizon; ++h) {
		const long cycles = (h + period - 1) / period;
		out[static_cast<std::size_t>(h - 1)] = train[static_cast<std::size_t>(n + h - period * cycles - 1)];
	}
	return out;
}

} // namespace pqf::models
