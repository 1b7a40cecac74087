#pragma once

#include "pqforecast/evaluation/corpus.hpp"
#include "pqforecast/models/forecast.hpp"

#include <span>
#include <string>
#include <vector>

namespace pqf::io {

inline const std::vector<std::string> kForecastHeader = {"series_id", "producer", "h", "value"};

/// Rows `series_id,producer,h,value` with h = 1..H, in the given order.
void write_forecast_csv(const std::string& path, std::span<const models::Forecast> forecasts);

/// Adds every forecast in the file to `index`. Steps must run 1..H without
/// gaps; a (producer, series) pair seen before throws DataError.
void read_forecast_csv(const std::string& path, evaluation::ForecastIndex& index);

evaluation::ForecastIndex read_forecast_csv(const std::string& path);

} // namespace pqf::io
