#pragma once

#include "pqforecast/core/preprocess.hpp"
#include "pqforecast/ensemble/ensemble_id.hpp"
#include "pqforecast/models/fit_config.hpp"
#include "pqforecast/models/model_id.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pqf::io {

struct RunConfig {
	int train_len = core::kTrainWeeks;
	int horizon = core::kHorizonWeeks;
	models::FitConfig fit{};
	std::vector<models::ModelId> models{models::kPublicModels.begin(), models::kPublicModels.end()};
	std::vector<ensemble::CombinationMethod> methods{std::begin(ensemble::kAllMethods),
	                                                 std::end(ensemble::kAllMethods)};
	bool loo_weights = false;
	int top_n = 100;
	int jobs = 1;
	std::uint64_t seed = 42;
	std::vector<core::PlanningLevel> planning_levels;
};

/// Reads an INI file with optional sections [run], [models], [ensemble] and
/// any number of [planning:<parameter>:<voltage>] sections holding `level`.
/// Unknown sections or keys, invalid values, and train_len/horizon given
/// without each other throw ConfigError.
RunConfig load_config(const std::string& path);

/// Applies the INI file on top of `config`.
void merge_config(const std::string& path, RunConfig& config);

/// The planning-level sections of an INI file; other sections are ignored.
std::vector<core::PlanningLevel> load_planning_levels(const std::string& path);

/// Comma-separated model names; throws ConfigError listing valid names.
std::vector<models::ModelId> parse_model_list(const std::string& text);
std::vector<ensemble::CombinationMethod> parse_method_list(const std::string& text);

/// Planning level for the (parameter, voltage) pair of `series_id`; throws
/// ConfigError naming the pair when none is configured.
const core::PlanningLevel& planning_level_for(const std::vector<core::PlanningLevel>& levels,
                                              const std::string& series_id);

} // namespace pqf::io
