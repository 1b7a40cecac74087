#include "pqforecast/io/forecast_csv.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/io/csv.hpp"

#include <fmt/format.h>
#include <fstream>
#include <stdexcept>

namespace pqf::io {

void write_forecast_csv(const std::string& path, std::span<const models::Forecast> forecasts) {
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out) {
		throw std::runtime_error("cannot write " + path);
	}
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "series_id,producer,h,value\n");
	for (const auto& f : forecasts) {
		const auto id = quote_csv_field(f.series_id);
		const auto producer = quote_csv_field(f.producer);
		for (std::size_t h = 0; h < f.values.size(); ++h) {
			fmt::format_to(std::back_inserter(buf), "{},{},{},{}\n", id, producer, h + 1, format_double(f.values[h]));
		}
		if (buf.size() > (1u << 20)) {
			out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
			buf.clear();
		}
	}
	out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
	if (!out) {
		throw std::runtime_error("failed writing " + path);
	}
}

void read_forecast_csv(const std::string& path, evaluation::ForecastIndex& index) {
	CsvReader reader(path, kForecastHeader);
	std::vector<std::string> f;
	std::vector<double>* current = nullptr;
	std::string cur_series, cur_producer;
	while (reader.next(f)) {
		const auto h = reader.to_int(f[2], "h");
		const double value = reader.to_double(f[3], "value");
		if (current == nullptr || f[0] != cur_series || f[1] != cur_producer) {
			if (h != 1) {
				reader.fail("forecast for series " + f[0] + ", producer " + f[1] + " does not start at h = 1");
			}
			auto& by_series = index[f[1]];
			if (by_series.contains(f[0])) {
				reader.fail("duplicate forecast for series " + f[0] + ", producer " + f[1]);
			}
			cur_series = f[0];
			cur_producer = f[1];
			current = &by_series[f[0]];
		} else if (h != static_cast<long long>(current->size()) + 1) {
			reader.fail("non-consecutive step h = " + f[2] + " for series " + f[0] + ", producer " + f[1]);
		}
		current->push_back(value);
	}
}

evaluation::ForecastIndex read_forecast_csv(const std::string& path) {
	evaluation::ForecastIndex index;
	read_forecast_csv(path, index);
	return index;
}

} // namespace pqf::io
