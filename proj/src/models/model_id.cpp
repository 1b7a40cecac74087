#include "pqforecast/models/model_id.hpp"

#include <algorithm>
#include <stdexcept>

namespace pqf::models {

namespace {

struct Entry {
	ModelId id;
	std::string_view name;
};

constexpr std::array<Entry, 13> kNames = {{
    {ModelId::SNaive, "SNaive"},
    {ModelId::HW, "HW"},
    {ModelId::SARIMA, "SARIMA"},
    {ModelId::Prophet, "Prophet"},
    {ModelId::StlDrift, "STL-Drift"},
    {ModelId::StlEs, "STL-ES"},
    {ModelId::StlHolt, "STL-Holt"},
    {ModelId::StlArima, "STL-ARIMA"},
    {ModelId::Naive, "Naive"},
    {ModelId::Drift, "Drift"},
    {ModelId::ES, "ES"},
    {ModelId::Holt, "Holt"},
    {ModelId::Arima, "ARIMA"},
}};

} // namespace

std::string_view name(ModelId id) {
	for (const auto& e : kNames) {
		if (e.id == id) {
			return e.name;
		}
	}
	return "unknown";
}

std::optional<ModelId> parse_model(std::string_view text) {
	for (const auto& e : kNames) {
		if (e.name == text) {
			return e.id;
		}
	}
	return std::nullopt;
}

bool is_public(ModelId id) {
	return std::find(kPublicModels.begin(), kPublicModels.end(), id) != kPublicModels.end();
}

int canonical_index(ModelId id) {
	const auto it = std::find(kPublicModels.begin(), kPublicModels.end(), id);
	if (it == kPublicModels.end()) {
		throw std::invalid_argument(std::string(name(id)) + " is not one of the eight public models");
	}
	return static_cast<int>(it - kPublicModels.begin());
}

std::string public_model_names() {
	std::string out;
	for (auto id : kPublicModels) {
		if (!out.empty()) {
			out += ", ";
		}
		out += name(id);
	}
	return out;
}

} // namespace pqf::models
