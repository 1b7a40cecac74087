#pragma once

#include "pqforecast/models/fit_config.hpp"
#include "pqforecast/models/forecast.hpp"
#include "pqforecast/models/model_id.hpp"

#include <span>
#include <string>

namespace pqf::models {

/// Fits `id` on `train` and returns its raw (unclamped) forecast.
/// Exceptions from the model propagate.
ModelOutput run_model(ModelId id, std::span<const double> train, int horizon, const FitConfig& config);

/// Corpus-safe wrapper: runs the model, replaces a failed or non-finite
/// result by the SNaive forecast with a warning, and clamps at zero.
Forecast forecast_model(const std::string& series_id, ModelId id, std::span<const double> train,
                        const FitConfig& config, int horizon, std::vector<std::string>& warnings);

/// Elementwise max(v, 0).
void clamp_nonnegative(std::vector<double>& values);

} // namespace pqf::models
