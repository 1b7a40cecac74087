#pragma once

#include <span>
#include <string>
#include <vector>

namespace pqf::io {

/// One auditable event of a pipeline stage, e.g. a model fallback.
struct ManifestEntry {
	std::string stage;
	std::string series_id;
	std::string producer;
	std::string event;   // "warning", "fallback", "rejected", "summary"
	std::string message;

	bool operator==(const ManifestEntry&) const = default;
};

/// Writes one JSON object per line, in the given order.
void write_manifest(const std::string& path, std::span<const ManifestEntry> entries);
std::vector<ManifestEntry> read_manifest(const std::string& path);

std::string to_json_line(const ManifestEntry& entry);

} // namespace pqf::io
