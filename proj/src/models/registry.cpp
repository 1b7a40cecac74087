#include "pqforecast/models/registry.hpp"

#include "pqforecast/models/baseline.hpp"
#include "pqforecast/models/exponential_smoothing.hpp"
#include "pqforecast/models/prophet_like.hpp"
#include "pqforecast/models/sarima.hpp"
#include "pqforecast/models/stl_composite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pqf::models {

ModelOutput run_model(ModelId id, std::span<const double> train, int horizon, const FitConfig& config) {
	const int period = config.seasonal_period;
	switch (id) {
	case ModelId::SNaive:
		return {forecast_snaive(train, horizon, period), {}};
	case ModelId::HW:
		return {forecast_hw(train, horizon, config), {}};
	case ModelId::SARIMA:
		return forecast_sarima(train, horizon, config);
	case ModelId::Prophet:
		return {forecast_prophet_like(train, horizon, config.prophet, period), {}};
	case ModelId::StlDrift:
		return forecast_stl_composite(train, horizon, ModelId::Drift, config);
	case ModelId::StlEs:
		return forecast_stl_composite(train, horizon, ModelId::ES, config);
	case ModelId::StlHolt:
		return forecast_stl_composite(train, horizon, ModelId::Holt, config);
	case ModelId::StlArima:
		return forecast_stl_composite(train, horizon, ModelId::Arima, config);
	case ModelId::Naive:
		return {forecast_naive(train, horizon), {}};
	case ModelId::Drift:
		return {forecast_drift(train, horizon), {}};
	case ModelId::ES:
		return {forecast_es(train, horizon, config), {}};
	case ModelId::Holt:
		return {forecast_holt(train, horizon, config), {}};
	case ModelId::Arima:
		return forecast_arima(train, horizon, config);
	}
	throw std::invalid_argument("unknown model id");
}

void clamp_nonnegative(std::vector<double>& values) {
	for (auto& v : values) {
		v = std::max(v, 0.0);
	}
}

Forecast forecast_model(const std::string& series_id, ModelId id, std::span<const double> train,
                        const FitConfig& config, int horizon, std::vector<std::string>& warnings) {
	Forecast f{series_id, std::string(name(id)), {}};
	try {
		auto out = run_model(id, train, horizon, config);
		const bool finite = std::all_of(out.values.begin(), out.values.end(), [](double v) { return std::isfinite(v); });
		if (!finite) {
			throw std::runtime_error("non-finite forecast");
		}
		warnings.insert(warnings.end(), out.warnings.begin(), out.warnings.end());
		f.values = std::move(out.values);
	} catch (const std::exception& e) {
		if (id == ModelId::SNaive) {
			throw;
		}
		warnings.push_back(std::string(name(id)) + " failed (" + e.what() + "); fell back to SNaive");
		f.values = forecast_snaive(train, horizon, config.seasonal_period);
	}
	clamp_nonnegative(f.values);
	return f;
}

} // namespace pqf::models
