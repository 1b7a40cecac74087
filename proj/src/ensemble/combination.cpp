#include "pqforecast/ensemble/combination.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pqf::ensemble {

std::vector<double> compute_weights(std::span<const double> phi) {
	if (phi.empty()) {
		throw std::invalid_argument("compute_weights: no members");
	}
	std::vector<double> w(phi.size());
	double total = 0.0;
	for (std::size_t i = 0; i < phi.size(); ++i) {
		if (!(phi[i] > 0.0) || !std::isfinite(phi[i])) {
			throw std::invalid_argument("compute_weights: performance metrics must be positive");
		}
		w[i] = 1.0 / phi[i];
		total += w[i];
	}
	for (auto& v : w) {
		v /= total;
	}
	return w;
}

models::Forecast combine(std::span<const models::Forecast> members, CombinationMethod method,
                         std::span<const double> phi) {
	if (members.size() < 2) {
		throw std::invalid_argument("combine: needs at least two member forecasts");
	}
	const auto& first = members.front();
	for (const auto& m : members) {
		if (m.series_id != first.series_id) {
			throw std::invalid_argument("combine: members belong to different series");
		}
		if (m.values.size() != first.values.size()) {
			throw std::invalid_argument("combine: members have different horizons");
		}
	}
	std::vector<double> weights;
	if (is_weighted(method)) {
		if (phi.size() != members.size()) {
			throw std::invalid_argument("combine: weighted method needs one phi per member");
		}
		weights = compute_weights(phi);
	}

	const auto horizon = first.values.size();
	const auto m = members.size();
	models::Forecast out{first.series_id, std::string(name(method)), std::vector<double>(horizon)};
	std::vector<double> column(m);
	for (std::size_t h = 0; h < horizon; ++h) {
		switch (method) {
		case CombinationMethod::Mean: {
			double sum = 0.0;
			for (const auto& f : members) {
				sum += f.values[h];
			}
			out.values[h] = sum / static_cast<double>(m);
			break;
		}
		case CombinationMethod::Median: {
			for (std::size_t i = 0; i < m; ++i) {
				column[i] = members[i].values[h];
			}
			std::sort(column.begin(), column.end());
			out.values[h] = m % 2 == 1 ? column[m / 2] : 0.5 * (column[m / 2 - 1] + column[m / 2]);
			break;
		}
		case CombinationMethod::SmapeWeighted:
		case CombinationMethod::RankWeighted: {
			double sum = 0.0;
			for (std::size_t i = 0; i < m; ++i) {
				sum += weights[i] * members[i].values[h];
			}
			out.values[h] = sum;
			break;
		}
		}
	}
	return out;
}

std::vector<models::Forecast> build_ensembles(std::span<const models::Forecast> members,
                                              std::span<const CombinationMethod> methods, const PhiTable* phi) {
	if (members.size() != 8) {
		throw std::invalid_argument("build_ensembles: expects the eight public model forecasts");
	}
	const bool weighted = std::any_of(methods.begin(), methods.end(), is_weighted);
	if (weighted && phi == nullptr) {
		throw std::invalid_argument("build_ensembles: weighted methods need performance metrics");
	}
	std::vector<models::Forecast> out;
	out.reserve(enumerate_ensembles().size() * methods.size());
	std::vector<models::Forecast> subset;
	std::vector<double> phi_values;
	for (const auto& id : enumerate_ensembles()) {
		subset.clear();
		for (int idx : id.members) {
			subset.push_back(members[static_cast<std::size_t>(idx)]);
		}
		for (auto method : methods) {
			phi_values.clear();
			if (method == CombinationMethod::SmapeWeighted) {
				for (int idx : id.members) {
					phi_values.push_back(phi->mean_smape[static_cast<std::size_t>(idx)]);
				}
			} else if (method == CombinationMethod::RankWeighted) {
				for (int idx : id.members) {
					phi_values.push_back(phi->mean_rank[static_cast<std::size_t>(idx)]);
				}
			}
			auto f = combine(subset, method, phi_values);
			f.producer = producer_label(id, method);
			out.push_back(std::move(f));
		}
	}
	return out;
}

} // namespace pqf::ensemble
