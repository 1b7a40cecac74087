#include "pqforecast/models/stl_composite.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/models/baseline.hpp"
#include "pqforecast/models/exponential_smoothing.hpp"
#include "pqforecast/models/sarima.hpp"
#include "pqforecast/numerics/stl.hpp"

#include <stdexcept>
#include <string>

namespace pqf::models {

ModelOutput forecast_stl_composite(std::span<const double> train, int horizon, ModelId adjusted_model,
                                   const FitConfig& config) {
	const int period = config.seasonal_period;
	if (train.size() < static_cast<std::size_t>(2 * period)) {
		throw DataError("stl composite: needs two full periods");
	}
	auto stl = config.stl;
	stl.period = period;
	const auto dec = numerics::stl_decompose(train, stl);

	std::vector<double> adjusted(train.size());
	for (std::size_t i = 0; i < train.size(); ++i) {
		adjusted[i] = dec.trend[i] + dec.remainder[i];
	}

	ModelOutput out;
	switch (adjusted_model) {
	case ModelId::Drift:
		out.values = forecast_drift(adjusted, horizon);
		break;
	case ModelId::ES:
		out.values = forecast_es(adjusted, horizon, config);
		break;
	case ModelId::Holt:
		out.values = forecast_holt(adjusted, horizon, config);
		break;
	case ModelId::Arima:
		out = forecast_arima(adjusted, horizon, config);
		break;
	default:
		throw std::invalid_argument("stl composite: unsupported adjusted model " + std::string(name(adjusted_model)));
	}

	const auto seasonal = forecast_snaive(dec.seasonal, horizon, period);
	for (int h = 0; h < horizon; ++h) {
		out.values[static_cast<std::size_t>(h)] += seasonal[static_cast<std::size_t>(h)];
	}
	return out;
}

} // namespace pqf::models
