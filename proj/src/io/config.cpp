#include "pqforecast/io/config.hpp"

#include "pqforecast/core/errors.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace pqf::io {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s) {
	const auto b = s.find_first_not_of(" \t");
	if (b == std::string::npos) {
		return {};
	}
	return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
	std::vector<std::string> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		item = trim(item);
		if (!item.empty()) {
			out.push_back(item);
		}
	}
	return out;
}

pt::ptree read_ini(const std::string& path) {
	pt::ptree tree;
	try {
		pt::read_ini(path, tree);
	} catch (const pt::ini_parser_error& e) {
		throw ConfigError(e.what());
	}
	return tree;
}

template <typename T>
T get_value(const pt::ptree& node, const std::string& section, const std::string& key) {
	try {
		return node.get_value<T>();
	} catch (const pt::ptree_bad_data&) {
		throw ConfigError("invalid value '" + node.data() + "' for " + section + "." + key);
	}
}

bool get_bool(const pt::ptree& node, const std::string& section, const std::string& key) {
	const auto v = trim(node.data());
	if (v == "true" || v == "1" || v == "yes") {
		return true;
	}
	if (v == "false" || v == "0" || v == "no") {
		return false;
	}
	throw ConfigError("invalid boolean '" + v + "' for " + section + "." + key);
}

int positive_int(const pt::ptree& node, const std::string& section, const std::string& key) {
	const int v = get_value<int>(node, section, key);
	if (v < 1) {
		throw ConfigError(section + "." + key + " must be positive");
	}
	return v;
}

core::PlanningLevel parse_planning_section(const std::string& name, const pt::ptree& section) {
	// planning:<parameter>:<voltage>
	const auto first = name.find(':');
	const auto second = name.find(':', first + 1);
	if (second == std::string::npos || name.find(':', second + 1) != std::string::npos) {
		throw ConfigError("planning section must be [planning:<parameter>:<voltage>], got [" + name + "]");
	}
	core::PlanningLevel level;
	level.parameter = name.substr(first + 1, second - first - 1);
	level.voltage_level = name.substr(second + 1);
	if (level.parameter.empty() || level.voltage_level.empty()) {
		throw ConfigError("empty parameter or voltage in [" + name + "]");
	}
	bool found = false;
	for (const auto& [key, node] : section) {
		if (key != "level") {
			throw ConfigError("unknown key '" + key + "' in [" + name + "]");
		}
		level.level = get_value<double>(node, name, key);
		found = true;
	}
	if (!found || !(level.level > 0.0) || !std::isfinite(level.level)) {
		throw ConfigError("[" + name + "] needs a positive level");
	}
	return level;
}

void apply_planning(const pt::ptree& tree, std::vector<core::PlanningLevel>& levels) {
	for (const auto& [name, section] : tree) {
		if (name.rfind("planning:", 0) != 0) {
			continue;
		}
		auto level = parse_planning_section(name, section);
		for (const auto& existing : levels) {
			if (existing.parameter == level.parameter && existing.voltage_level == level.voltage_level) {
				throw ConfigError("duplicate planning level for " + level.parameter + " at " + level.voltage_level);
			}
		}
		levels.push_back(std::move(level));
	}
}

} // namespace

std::vector<models::ModelId> parse_model_list(const std::string& text) {
	std::vector<models::ModelId> out;
	for (const auto& item : split_list(text)) {
		auto id = models::parse_model(item);
		if (!id || !models::is_public(*id)) {
			throw ConfigError("unknown model '" + item + "'; valid models: " + models::public_model_names());
		}
		if (std::find(out.begin(), out.end(), *id) == out.end()) {
			out.push_back(*id);
		}
	}
	if (out.empty()) {
		throw ConfigError("empty model list; valid models: " + models::public_model_names());
	}
	return out;
}

std::vector<ensemble::CombinationMethod> parse_method_list(const std::string& text) {
	std::vector<ensemble::CombinationMethod> out;
	for (const auto& item : split_list(text)) {
		auto m = ensemble::parse_method(item);
		if (!m) {
			throw ConfigError("unknown combination method '" + item + "'; valid methods: mean, median, smape, rank");
		}
		if (std::find(out.begin(), out.end(), *m) == out.end()) {
			out.push_back(*m);
		}
	}
	if (out.empty()) {
		throw ConfigError("empty method list");
	}
	return out;
}

void merge_config(const std::string& path, RunConfig& config) {
	const auto tree = read_ini(path);
	std::optional<int> train_len, horizon;
	for (const auto& [name, section] : tree) {
		if (name.rfind("planning:", 0) == 0) {
			continue;
		}
		if (section.empty() && !section.data().empty()) {
			throw ConfigError("key '" + name + "' outside of a section");
		}
		for (const auto& [key, node] : section) {
			if (name == "run") {
				if (key == "train_len") {
					train_len = positive_int(node, name, key);
				} else if (key == "horizon") {
					horizon = positive_int(node, name, key);
				} else if (key == "jobs") {
					config.jobs = positive_int(node, name, key);
				} else if (key == "seed") {
					config.seed = get_value<std::uint64_t>(node, name, key);
				} else if (key == "top_n") {
					config.top_n = positive_int(node, name, key);
				} else {
					throw ConfigError("unknown key '" + key + "' in [run]");
				}
			} else if (name == "models") {
				auto& fit = config.fit;
				if (key == "use") {
					config.models = parse_model_list(node.data());
				} else if (key == "seasonal_period") {
					fit.seasonal_period = positive_int(node, name, key);
					fit.stl.period = fit.seasonal_period;
				} else if (key == "optimizer_tol") {
					fit.optimizer_tol = get_value<double>(node, name, key);
				} else if (key == "optimizer_max_iter") {
					fit.optimizer_max_iter = positive_int(node, name, key);
				} else if (key == "prophet_changepoints") {
					fit.prophet.changepoints = get_value<int>(node, name, key);
				} else if (key == "prophet_changepoint_range") {
					fit.prophet.changepoint_range = get_value<double>(node, name, key);
				} else if (key == "prophet_fourier_order") {
					fit.prophet.fourier_order = positive_int(node, name, key);
				} else if (key == "prophet_ridge") {
					fit.prophet.changepoint_ridge = get_value<double>(node, name, key);
				} else if (key == "stl_periodic") {
					fit.stl.periodic = get_bool(node, name, key);
				} else if (key == "stl_seasonal_window") {
					fit.stl.seasonal_window = get_value<int>(node, name, key);
				} else if (key == "stl_outer_iterations") {
					fit.stl.outer_iterations = get_value<int>(node, name, key);
				} else if (key == "stl_inner_iterations") {
					fit.stl.inner_iterations = positive_int(node, name, key);
				} else if (key == "arima_max_p") {
					fit.sarima.max_p = fit.stl_arima.max_p = get_value<int>(node, name, key);
				} else if (key == "arima_max_q") {
					fit.sarima.max_q = fit.stl_arima.max_q = get_value<int>(node, name, key);
				} else {
					throw ConfigError("unknown key '" + key + "' in [models]");
				}
			} else if (name == "ensemble") {
				if (key == "methods") {
					config.methods = parse_method_list(node.data());
				} else if (key == "loo_weights") {
					config.loo_weights = get_bool(node, name, key);
				} else {
					throw ConfigError("unknown key '" + key + "' in [ensemble]");
				}
			} else {
				throw ConfigError("unknown section [" + name + "]");
			}
		}
	}
	if (train_len.has_value() != horizon.has_value()) {
		throw ConfigError("train_len and horizon must be overridden together");
	}
	if (train_len) {
		config.train_len = *train_len;
		config.horizon = *horizon;
	}
	apply_planning(tree, config.planning_levels);
}

RunConfig load_config(const std::string& path) {
	RunConfig config;
	merge_config(path, config);
	return config;
}

std::vector<core::PlanningLevel> load_planning_levels(const std::string& path) {
	std::vector<core::PlanningLevel> levels;
	apply_planning(read_ini(path), levels);
	return levels;
}

const core::PlanningLevel& planning_level_for(const std::vector<core::PlanningLevel>& levels,
                                              const std::string& series_id) {
	const auto key = core::SeriesKey::parse(series_id);
	for (const auto& level : levels) {
		if (level.parameter == key.parameter && level.voltage_level == key.voltage_level) {
			return level;
		}
	}
	throw ConfigError("no planning level for parameter " + key.parameter + " at voltage " + key.voltage_level);
}

} // namespace pqf::io
