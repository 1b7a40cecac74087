#pragma once

#include "pqforecast/models/fit_config.hpp"
#include "pqforecast/models/forecast.hpp"
#include "pqforecast/models/model_id.hpp"

#include <span>

namespace pqf::models {

/// STL decomposition at the seasonal period; the seasonal part is continued
/// by repeating its last cycle, the seasonally adjusted part (trend +
/// remainder) by `adjusted_model` (Drift, ES, Holt or ARIMA), and the two are
/// summed. Needs two full periods.
ModelOutput forecast_stl_composite(std::span<const double> train, int horizon, ModelId adjusted_model,
                                   const FitConfig& config);

} // namespace pqf::models
