#pragma once

#include "pqforecast/core/series.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace pqf::io {

/// Parses `YYYY-MM-DDTHH:MM[:SS[.fff]]` with an optional `Z` or `+hh:mm` /
/// `-hh:mm` offset (a space may replace the `T`). Offsets are converted to
/// UTC; fractional seconds must be zero. Returns nullopt on malformed input.
std::optional<core::Timestamp> parse_timestamp(std::string_view text);

/// `YYYY-MM-DDTHH:MM:SSZ`
std::string format_timestamp(core::Timestamp t);

} // namespace pqf::io
