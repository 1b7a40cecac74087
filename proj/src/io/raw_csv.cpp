#include "pqforecast/io/raw_csv.hpp"

#include "pqforecast/io/csv.hpp"
#include "pqforecast/io/timestamp.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <map>

namespace pqf::io {

std::vector<core::RawSeries> read_raw_csv(const std::string& path) {
	CsvReader reader(path, kRawHeader);
	std::map<std::string, std::vector<core::Sample>> grouped;
	std::vector<std::string> f;
	while (reader.next(f)) {
		if (f[0].empty()) {
			reader.fail("empty series_id");
		}
		auto t = parse_timestamp(f[1]);
		if (!t) {
			reader.fail("invalid timestamp '" + f[1] + "'");
		}
		grouped[f[0]].push_back({*t, reader.to_double(f[2], "value")});
	}
	std::vector<core::RawSeries> out;
	out.reserve(grouped.size());
	for (auto& [id, samples] : grouped) {
		std::stable_sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.time < b.time; });
		out.push_back({id, std::move(samples)});
	}
	return out;
}

void write_raw_csv(const std::string& path, std::span<const core::RawSeries> series) {
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "series_id,timestamp_iso8601,value\n");
	for (const auto& s : series) {
		const auto id = quote_csv_field(s.series_id);
		for (const auto& sample : s.samples) {
			fmt::format_to(std::back_inserter(buf), "{},{},{}\n", id, format_timestamp(sample.time),
			               format_double(sample.value));
		}
	}
	write_text_file(path, std::string_view(buf.data(), buf.size()));
}

} // namespace pqf::io
