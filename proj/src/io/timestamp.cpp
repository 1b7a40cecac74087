#include "pqforecast/io/timestamp.hpp"

#include <charconv>
#include <fmt/format.h>

namespace pqf::io {

namespace {

bool read_int(std::string_view text, std::size_t pos, std::size_t len, int& out) {
	if (pos + len > text.size()) {
		return false;
	}
	for (std::size_t i = pos; i < pos + len; ++i) {
		if (text[i] < '0' || text[i] > '9') {
			return false;
		}
	}
	auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
	return ec == std::errc();
}

} // namespace

std::optional<core::Timestamp> parse_timestamp(std::string_view text) {
	using namespace std::chrono;
	int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
	if (!read_int(text, 0, 4, y) || text.size() < 16 || text[4] != '-' || !read_int(text, 5, 2, mo) ||
	    text[7] != '-' || !read_int(text, 8, 2, d) || (text[10] != 'T' && text[10] != ' ') ||
	    !read_int(text, 11, 2, h) || text[13] != ':' || !read_int(text, 14, 2, mi)) {
		return std::nullopt;
	}
	std::size_t pos = 16;
	if (pos < text.size() && text[pos] == ':') {
		if (!read_int(text, pos + 1, 2, s)) {
			return std::nullopt;
		}
		pos += 3;
		if (pos < text.size() && text[pos] == '.') {
			++pos;
			const auto start = pos;
			while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
				if (text[pos] != '0') {
					return std::nullopt;
				}
				++pos;
			}
			if (pos == start) {
				return std::nullopt;
			}
		}
	}
	int offset_minutes = 0;
	if (pos < text.size()) {
		if (text[pos] == 'Z' && pos + 1 == text.size()) {
			pos += 1;
		} else if ((text[pos] == '+' || text[pos] == '-') && text.size() == pos + 6 && text[pos + 3] == ':') {
			int oh = 0, om = 0;
			if (!read_int(text, pos + 1, 2, oh) || !read_int(text, pos + 4, 2, om) || oh > 23 || om > 59) {
				return std::nullopt;
			}
			offset_minutes = (text[pos] == '+' ? 1 : -1) * (oh * 60 + om);
			pos += 6;
		} else {
			return std::nullopt;
		}
	}
	if (h > 23 || mi > 59 || s > 59) {
		return std::nullopt;
	}
	const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
	if (!ymd.ok()) {
		return std::nullopt;
	}
	return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s} - minutes{offset_minutes};
}

std::string format_timestamp(core::Timestamp t) {
	using namespace std::chrono;
	const auto day = floor<days>(t);
	const year_month_day ymd{day};
	const hh_mm_ss hms{t - day};
	return fmt::format("{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z", static_cast<int>(ymd.year()),
	                   static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), hms.hours().count(),
	                   hms.minutes().count(), hms.seconds().count());
}

} // namespace pqf::io
