#include "pqforecast/evaluation/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace pqf::evaluation {

namespace {

void check(std::span<const double> a, std::span<const double> f) {
	if (a.size() != f.size()) {
		throw std::invalid_argument("metric: actual and forecast differ in length");
	}
	if (a.empty()) {
		throw std::invalid_argument("metric: empty horizon");
	}
}

} // namespace

double mae(std::span<const double> actual, std::span<const double> forecast) {
	check(actual, forecast);
	double sum = 0.0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		sum += std::abs(actual[i] - forecast[i]);
	}
	return sum / static_cast<double>(actual.size());
}

double smape(std::span<const double> actual, std::span<const double> forecast) {
	check(actual, forecast);
	double sum = 0.0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		const double denom = std::abs(actual[i]) + std::abs(forecast[i]);
		if (denom > 0.0) {
			sum += std::abs(actual[i] - forecast[i]) / denom;
		}
	}
	return 200.0 * sum / static_cast<double>(actual.size());
}

SmapeClass classify_smape(double value) {
	if (value < 10.0) {
		return SmapeClass::Good;
	}
	if (value <= 25.0) {
		return SmapeClass::Acceptable;
	}
	return SmapeClass::Poor;
}

std::string_view name(SmapeClass c) {
	switch (c) {
	case SmapeClass::Good:
		return "good";
	case SmapeClass::Acceptable:
		return "acceptable";
	case SmapeClass::Poor:
		return "poor";
	}
	return "unknown";
}

double benchmark_ratio(double mean_smape, double benchmark_mean_smape) {
	if (!(benchmark_mean_smape > 0.0)) {
		throw std::invalid_argument("benchmark_ratio: benchmark mean sMAPE must be positive");
	}
	return mean_smape / benchmark_mean_smape;
}

} // namespace pqf::evaluation
