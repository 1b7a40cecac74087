#include "pqforecast/io/leaderboard_csv.hpp"

#include "pqforecast/io/csv.hpp"
#include "pqforecast/models/model_id.hpp"

#include <fmt/format.h>

namespace pqf::io {

namespace {

void flush(const std::string& path, const fmt::memory_buffer& buf) {
	write_text_file(path, std::string_view(buf.data(), buf.size()));
}

void append_groups(fmt::memory_buffer& buf, std::string_view key_name,
                   std::span<const evaluation::GroupAggregate> groups, bool key_is_model) {
	fmt::format_to(std::back_inserter(buf), "{},count,mean,p25,median,p75,min,max\n", key_name);
	for (const auto& g : groups) {
		const std::string key = key_is_model ? std::string(models::name(models::kPublicModels[static_cast<std::size_t>(g.key)]))
		                                     : std::to_string(g.key);
		fmt::format_to(std::back_inserter(buf), "{},{},{},{},{},{},{},{}\n", key, g.count, format_double(g.mean),
		               format_double(g.p25), format_double(g.median), format_double(g.p75), format_double(g.min),
		               format_double(g.max));
	}
}

} // namespace

void write_leaderboard_csv(const std::string& path, const evaluation::Leaderboard& board) {
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "rank,producer,mean_mae,mean_smape,mean_rank,benchmark_ratio\n");
	for (const auto& r : board.rows) {
		fmt::format_to(std::back_inserter(buf), "{},{},{},{},{},{}\n", r.rank, quote_csv_field(r.producer),
		               format_double(r.mean_mae), format_double(r.mean_smape), format_double(r.mean_rank),
		               format_double(r.benchmark_ratio));
	}
	flush(path, buf);
}

evaluation::Leaderboard read_leaderboard_csv(const std::string& path) {
	CsvReader reader(path, kLeaderboardHeader);
	evaluation::Leaderboard board;
	std::vector<std::string> f;
	while (reader.next(f)) {
		evaluation::LeaderboardRow row;
		row.rank = static_cast<int>(reader.to_int(f[0], "rank"));
		row.producer = f[1];
		row.mean_mae = reader.to_double(f[2], "mean_mae");
		row.mean_smape = reader.to_double(f[3], "mean_smape");
		row.mean_rank = reader.to_double(f[4], "mean_rank");
		row.benchmark_ratio = reader.to_double(f[5], "benchmark_ratio");
		board.rows.push_back(std::move(row));
	}
	return board;
}

void write_records_csv(const std::string& path, std::span<const evaluation::EvalRecord> records) {
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "series_id,producer,mae,smape,rank\n");
	for (const auto& r : records) {
		fmt::format_to(std::back_inserter(buf), "{},{},{},{},{}\n", quote_csv_field(r.series_id),
		               quote_csv_field(r.producer), format_double(r.mae), format_double(r.smape), format_double(r.rank));
	}
	flush(path, buf);
}

void write_composition_csvs(const std::string& prefix, const evaluation::CompositionReport& report) {
	fmt::memory_buffer models_buf;
	fmt::format_to(std::back_inserter(models_buf), "model,slots,share\n");
	for (std::size_t k = 0; k < 8; ++k) {
		fmt::format_to(std::back_inserter(models_buf), "{},{},{}\n", models::name(models::kPublicModels[k]),
		               report.model_slots[k], format_double(report.model_share[k]));
	}
	flush(prefix + "_models.csv", models_buf);

	fmt::memory_buffer sizes;
	fmt::format_to(std::back_inserter(sizes), "size,count\n");
	for (const auto& [size, count] : report.size_histogram) {
		fmt::format_to(std::back_inserter(sizes), "{},{}\n", size, count);
	}
	flush(prefix + "_sizes.csv", sizes);

	fmt::memory_buffer methods;
	fmt::format_to(std::back_inserter(methods), "method,count\n");
	for (const auto& [method, count] : report.method_histogram) {
		fmt::format_to(std::back_inserter(methods), "{},{}\n", method, count);
	}
	flush(prefix + "_methods.csv", methods);

	fmt::memory_buffer members;
	append_groups(members, "model", report.by_member, true);
	flush(prefix + "_members.csv", members);
}

void write_size_aggregates_csv(const std::string& path, std::span<const evaluation::GroupAggregate> groups) {
	fmt::memory_buffer buf;
	append_groups(buf, "size", groups, false);
	flush(path, buf);
}

void write_comparison_csv(const std::string& path, const evaluation::ComparisonReport& report) {
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "series_id,individual_smape,ensemble_smape,improvement_percent\n");
	for (const auto& p : report.points) {
		fmt::format_to(std::back_inserter(buf), "{},{},{},{}\n", quote_csv_field(p.series_id),
		               format_double(p.individual_smape), format_double(p.ensemble_smape),
		               format_double(p.improvement));
	}
	flush(path, buf);
}

void write_ecdf_csv(const std::string& path, const evaluation::ComparisonReport& report) {
	fmt::memory_buffer buf;
	fmt::format_to(std::back_inserter(buf), "improvement_percent,cumulative_fraction\n");
	for (const auto& [x, p] : report.ecdf) {
		fmt::format_to(std::back_inserter(buf), "{},{}\n", format_double(x), format_double(p));
	}
	flush(path, buf);
}

} // namespace pqf::io
