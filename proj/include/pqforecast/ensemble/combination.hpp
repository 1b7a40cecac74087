#pragma once

#include "pqforecast/ensemble/ensemble_id.hpp"
#include "pqforecast/models/forecast.hpp"

#include <array>
#include <span>
#include <vector>

namespace pqf::ensemble {

/// Inverse-metric weights w_i = (1/phi_i) / sum_j (1/phi_j).
/// Throws std::invalid_argument unless every phi_i is positive and finite.
std::vector<double> compute_weights(std::span<const double> phi);

/// Pointwise combination of member forecasts for one series. Weighted
/// methods require one phi per member (mean sMAPE or mean rank of that
/// model); unweighted methods ignore phi. Even-sized medians take the
/// midpoint of the two central values.
models::Forecast combine(std::span<const models::Forecast> members, CombinationMethod method,
                         std::span<const double> phi = {});

/// Corpus-level performance of the eight public models, indexed canonically,
/// supplying phi for the weighted methods.
struct PhiTable {
	std::array<double, 8> mean_smape{};
	std::array<double, 8> mean_rank{};
};

/// Every ensemble x method forecast for one series. `members` holds the
/// eight public model forecasts in canonical order. `phi` may be null when
/// no weighted method is requested.
std::vector<models::Forecast> build_ensembles(std::span<const models::Forecast> members,
                                              std::span<const CombinationMethod> methods, const PhiTable* phi);

} // namespace pqf::ensemble
