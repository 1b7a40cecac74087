#include "pqforecast/numerics/differencing.hpp"

#include <stdexcept>

namespace pqf::numerics {

Differenced difference(std::span<const double> y, int lag, int times) {
	if (lag < 1 || times < 0) {
		throw std::invalid_argument("difference: lag must be >= 1 and times >= 0");
	}
	if (static_cast<long>(y.size()) <= static_cast<long>(lag) * times) {
		throw std::invalid_argument("difference: series too short for requested differencing");
	}
	Differenced out;
	out.lag = lag;
	out.values.assign(y.begin(), y.end());
	const auto ulag = static_cast<std::size_t>(lag);
	for (int t = 0; t < times; ++t) {
		out.heads.emplace_back(out.values.begin(), out.values.begin() + lag);
		std::vector<double> next(out.values.size() - ulag);
		for (std::size_t i = 0; i < next.size(); ++i) {
			next[i] = out.values[i + ulag] - out.values[i];
		}
		out.values = std::move(next);
	}
	return out;
}

std::vector<double> invert_difference(const std::vector<std::vector<double>>& heads, std::span<const double> diffed,
                                      int lag) {
	if (lag < 1) {
		throw std::invalid_argument("invert_difference: lag must be >= 1");
	}
	const auto ulag = static_cast<std::size_t>(lag);
	std::vector<double> level(diffed.begin(), diffed.end());
	for (auto it = heads.rbegin(); it != heads.rend(); ++it) {
		if (it->size() != ulag) {
			throw std::invalid_argument("invert_difference: head length differs from lag");
		}
		std::vector<double> up(level.size() + ulag);
		std::copy(it->begin(), it->end(), up.begin());
		for (std::size_t i = ulag; i < up.size(); ++i) {
			up[i] = level[i - ulag] + up[i - ulag];
		}
		level = std::move(up);
	}
	return level;
}

} // namespace pqf::numerics
