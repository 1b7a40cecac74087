#pragma once

#include <stdexcept>
#include <string>

namespace pqf {

/// Bad or inconsistent input data (unparseable rows, duplicate timestamps,
/// too short histories, missing forecasts).
class DataError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Invalid configuration (planning levels, model names, run options).
class ConfigError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace pqf
