#include "pqforecast/io/manifest.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/io/csv.hpp"

#include <fstream>
#include <json.hpp>

namespace pqf::io {

std::string to_json_line(const ManifestEntry& entry) {
	nlohmann::ordered_json j;
	j["stage"] = entry.stage;
	j["series_id"] = entry.series_id;
	j["producer"] = entry.producer;
	j["event"] = entry.event;
	j["message"] = entry.message;
	return j.dump();
}

void write_manifest(const std::string& path, std::span<const ManifestEntry> entries) {
	std::string text;
	for (const auto& e : entries) {
		text += to_json_line(e);
		text += '\n';
	}
	write_text_file(path, text);
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
	std::ifstream in(path);
	if (!in) {
		throw DataError("cannot open " + path);
	}
	std::vector<ManifestEntry> out;
	std::string line;
	std::size_t n = 0;
	while (std::getline(in, line)) {
		++n;
		if (line.empty()) {
			continue;
		}
		try {
			const auto j = nlohmann::json::parse(line);
			out.push_back({j.at("stage").get<std::string>(), j.at("series_id").get<std::string>(),
			               j.at("producer").get<std::string>(), j.at("event").get<std::string>(),
			               j.at("message").get<std::string>()});
		} catch (const nlohmann::json::exception& e) {
			throw DataError(path + ":" + std::to_string(n) + ": " + e.what());
		}
	}
	return out;
}

} // namespace pqf::io
