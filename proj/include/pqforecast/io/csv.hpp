#pragma once

#include <cstddef>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace pqf::io {

/// Splits one CSV record. Fields may be double-quoted; a doubled quote inside
/// a quoted field is a literal quote. Throws std::invalid_argument on an
/// unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quotes a field when it contains a comma, quote or newline.
std::string quote_csv_field(std::string_view field);

/// Line-oriented reader that validates the header and reports errors as
/// DataError("<path>:<line>: <message>").
class CsvReader {
public:
	CsvReader(const std::string& path, const std::vector<std::string>& expected_header);

	/// Next non-empty record; false at end of file.
	bool next(std::vector<std::string>& fields);

	std::size_t line() const { return line_; }
	const std::string& path() const { return path_; }

	[[noreturn]] void fail(const std::string& message) const;

	double to_double(const std::string& field, std::string_view column) const;
	long long to_int(const std::string& field, std::string_view column) const;

private:
	std::string path_;
	std::ifstream in_;
	std::size_t line_ = 0;
	std::size_t columns_ = 0;
};

/// Whole file with a header row; every record must have the header's width.
struct CsvTable {
	std::vector<std::string> header;
	std::vector<std::vector<std::string>> rows;

	/// Index of a header column; throws DataError when absent.
	std::size_t column(std::string_view name) const;
};

CsvTable read_csv_table(const std::string& path);

/// First line of a file with any trailing CR removed; empty if unreadable.
std::string read_header_line(const std::string& path);

/// Shortest representation that round-trips to the same double.
std::string format_double(double value);

/// Writes `content` to `path`, replacing the file. Throws std::runtime_error
/// if the file cannot be written.
void write_text_file(const std::string& path, std::string_view content);

} // namespace pqf::io
