#include "pqforecast/evaluation/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace pqf::evaluation {

std::vector<double> rank_within_series(std::span<const double> scores) {
	const auto n = scores.size();
	std::vector<std::size_t> order(n);
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return scores[a] < scores[b]; });
	std::vector<double> ranks(n);
	for (std::size_t i = 0; i < n;) {
		std::size_t j = i;
		while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) {
			++j;
		}
		// positions i..j (0-based) share rank mean(i+1 .. j+1)
		const double r = 0.5 * static_cast<double>(i + j) + 1.0;
		for (std::size_t k = i; k <= j; ++k) {
			ranks[order[k]] = r;
		}
		i = j + 1;
	}
	return ranks;
}

} // namespace pqf::evaluation
