#include "pqforecast/io/csv.hpp"

#include "pqforecast/core/errors.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace pqf::io {

std::vector<std::string> split_csv_line(std::string_view line) {
	std::vector<std::string> fields;
	std::string current;
	bool quoted = false;
	for (std::size_t i = 0; i < line.size(); ++i) {
		const char c = line[i];
		if (quoted) {
			if (c == '"') {
				if (i + 1 < line.size() && line[i + 1] == '"') {
					current.push_back('"');
					++i;
				} else {
					quoted = false;
				}
			} else {
				current.push_back(c);
			}
		} else if (c == '"') {
			quoted = true;
		} else if (c == ',') {
			fields.push_back(std::move(current));
			current.clear();
		} else {
			current.push_back(c);
		}
	}
	if (quoted) {
		throw std::invalid_argument("unterminated quoted field");
	}
	fields.push_back(std::move(current));
	return fields;
}

std::string quote_csv_field(std::string_view field) {
	if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
		return std::string(field);
	}
	std::string out = "\"";
	for (char c : field) {
		if (c == '"') {
			out.push_back('"');
		}
		out.push_back(c);
	}
	out.push_back('"');
	return out;
}

namespace {

void strip_cr(std::string& s) {
	if (!s.empty() && s.back() == '\r') {
		s.pop_back();
	}
}

std::string trim(std::string_view s) {
	const auto b = s.find_first_not_of(" \t");
	if (b == std::string_view::npos) {
		return {};
	}
	const auto e = s.find_last_not_of(" \t");
	return std::string(s.substr(b, e - b + 1));
}

} // namespace

CsvReader::CsvReader(const std::string& path, const std::vector<std::string>& expected_header)
    : path_(path), in_(path), columns_(expected_header.size()) {
	if (!in_) {
		throw DataError("cannot open " + path);
	}
	std::string header;
	if (!std::getline(in_, header)) {
		throw DataError(path + ": empty file");
	}
	++line_;
	strip_cr(header);
	if (header.size() >= 3 && header.compare(0, 3, "\xEF\xBB\xBF") == 0) {
		header.erase(0, 3);
	}
	auto fields = split_csv_line(header);
	for (auto& f : fields) {
		f = trim(f);
	}
	if (fields != expected_header) {
		std::string expected;
		for (const auto& h : expected_header) {
			expected += (expected.empty() ? "" : ",") + h;
		}
		fail("unexpected header, expected " + expected);
	}
}

bool CsvReader::next(std::vector<std::string>& fields) {
	std::string text;
	while (std::getline(in_, text)) {
		++line_;
		strip_cr(text);
		if (text.find_first_not_of(" \t") == std::string::npos) {
			continue;
		}
		try {
			fields = split_csv_line(text);
		} catch (const std::invalid_argument& e) {
			fail(e.what());
		}
		if (fields.size() != columns_) {
			fail(fmt::format("expected {} fields, found {}", columns_, fields.size()));
		}
		for (auto& f : fields) {
			f = trim(f);
		}
		return true;
	}
	return false;
}

void CsvReader::fail(const std::string& message) const {
	throw DataError(fmt::format("{}:{}: {}", path_, line_, message));
}

double CsvReader::to_double(const std::string& field, std::string_view column) const {
	double v = 0.0;
	const auto* end = field.data() + field.size();
	auto [ptr, ec] = std::from_chars(field.data(), end, v);
	if (ec != std::errc() || ptr != end || field.empty()) {
		fail(fmt::format("invalid number '{}' in column {}", field, column));
	}
	return v;
}

long long CsvReader::to_int(const std::string& field, std::string_view column) const {
	long long v = 0;
	const auto* end = field.data() + field.size();
	auto [ptr, ec] = std::from_chars(field.data(), end, v);
	if (ec != std::errc() || ptr != end || field.empty()) {
		fail(fmt::format("invalid integer '{}' in column {}", field, column));
	}
	return v;
}

std::size_t CsvTable::column(std::string_view name) const {
	for (std::size_t i = 0; i < header.size(); ++i) {
		if (header[i] == name) {
			return i;
		}
	}
	throw DataError("missing column " + std::string(name));
}

CsvTable read_csv_table(const std::string& path) {
	CsvTable table;
	const auto header = read_header_line(path);
	if (header.empty()) {
		throw DataError("cannot read " + path);
	}
	table.header = split_csv_line(header);
	CsvReader reader(path, table.header);
	std::vector<std::string> fields;
	while (reader.next(fields)) {
		table.rows.push_back(fields);
	}
	return table;
}

std::string read_header_line(const std::string& path) {
	std::ifstream in(path);
	std::string header;
	if (!in || !std::getline(in, header)) {
		return {};
	}
	strip_cr(header);
	if (header.size() >= 3 && header.compare(0, 3, "\xEF\xBB\xBF") == 0) {
		header.erase(0, 3);
	}
	return header;
}

std::string format_double(double value) {
	if (value == 0.0) {
		return "0";
	}
	return fmt::format("{}", value);
}

void write_text_file(const std::string& path, std::string_view content) {
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out) {
		throw std::runtime_error("cannot write " + path);
	}
	out.write(content.data(), static_cast<std::streamsize>(content.size()));
	if (!out) {
		throw std::runtime_error("failed writing " + path);
	}
}

} // namespace pqf::io
