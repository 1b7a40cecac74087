#pragma once

#include "pqforecast/evaluation/analysis.hpp"

#include <span>
#include <string>
#include <vector>

namespace pqf::io {

inline const std::vector<std::string> kLeaderboardHeader = {"rank",       "producer",  "mean_mae",
                                                            "mean_smape", "mean_rank", "benchmark_ratio"};

void write_leaderboard_csv(const std::string& path, const evaluation::Leaderboard& board);
evaluation::Leaderboard read_leaderboard_csv(const std::string& path);

/// Per-series records: `series_id,producer,mae,smape,rank`.
void write_records_csv(const std::string& path, std::span<const evaluation::EvalRecord> records);

/// `<prefix>_models.csv`, `<prefix>_sizes.csv`, `<prefix>_methods.csv` and
/// `<prefix>_members.csv` for the composition report.
void write_composition_csvs(const std::string& prefix, const evaluation::CompositionReport& report);

/// `size,count,mean,p25,median,p75,min,max`
void write_size_aggregates_csv(const std::string& path, std::span<const evaluation::GroupAggregate> groups);

/// Paired scatter data and the improvement ECDF.
void write_comparison_csv(const std::string& path, const evaluation::ComparisonReport& report);
void write_ecdf_csv(const std::string& path, const evaluation::ComparisonReport& report);

} // namespace pqf::io
