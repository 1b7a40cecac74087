#pragma once

#include "pqforecast/core/series.hpp"

#include <span>
#include <string>
#include <vector>

namespace pqf::io {

inline const std::vector<std::string> kRawHeader = {"series_id", "timestamp_iso8601", "value"};

/// Reads `series_id,timestamp_iso8601,value`; series are returned sorted by
/// id with samples sorted by time. Unparseable rows throw DataError with the
/// line number.
std::vector<core::RawSeries> read_raw_csv(const std::string& path);

void write_raw_csv(const std::string& path, std::span<const core::RawSeries> series);

} // namespace pqf::io
