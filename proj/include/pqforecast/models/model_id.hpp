#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace pqf::models {

/// The eight published forecasters plus the building blocks they are made of.
enum class ModelId {
	SNaive,
	HW,
	SARIMA,
	Prophet,
	StlDrift,
	StlEs,
	StlHolt,
	StlArima,
	// building blocks
	Naive,
	Drift,
	ES,
	Holt,
	Arima,
};

/// Canonical order of the public models; ensemble member indices refer to it.
inline constexpr std::array<ModelId, 8> kPublicModels = {
    ModelId::SNaive,   ModelId::HW,    ModelId::SARIMA,  ModelId::Prophet,
    ModelId::StlDrift, ModelId::StlEs, ModelId::StlHolt, ModelId::StlArima,
};

std::string_view name(ModelId id);
std::optional<ModelId> parse_model(std::string_view text);
bool is_public(ModelId id);

/// Position in kPublicModels; throws std::invalid_argument for building blocks.
int canonical_index(ModelId id);

/// Comma-separated list of public model names, for error messages.
std::string public_model_names();

} // namespace pqf::models
