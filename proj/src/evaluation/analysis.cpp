#include "pqforecast/evaluation/analysis.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/core/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pqf::evaluation {

namespace {

GroupAggregate aggregate(int key, std::vector<double> values) {
	GroupAggregate g;
	g.key = key;
	g.count = static_cast<int>(values.size());
	if (values.empty()) {
		const double nan = std::numeric_limits<double>::quiet_NaN();
		g.mean = g.p25 = g.median = g.p75 = g.min = g.max = nan;
		return g;
	}
	std::sort(values.begin(), values.end());
	g.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
	g.p25 = core::percentile(values, 0.25);
	g.median = core::percentile(values, 0.5);
	g.p75 = core::percentile(values, 0.75);
	g.min = values.front();
	g.max = values.back();
	return g;
}

double median_of(std::vector<double> v) {
	if (v.empty()) {
		return std::numeric_limits<double>::quiet_NaN();
	}
	return core::percentile(std::move(v), 0.5);
}

} // namespace

std::vector<GroupAggregate> size_aggregates(const Leaderboard& ensembles,
                                            std::optional<ensemble::CombinationMethod> method) {
	std::map<int, std::vector<double>> groups;
	for (const auto& row : ensembles.rows) {
		auto parsed = ensemble::parse_producer_label(row.producer);
		if (!parsed || (method && parsed->second != *method)) {
			continue;
		}
		groups[parsed->first.size()].push_back(row.mean_smape);
	}
	std::vector<GroupAggregate> out;
	for (auto& [size, values] : groups) {
		out.push_back(aggregate(size, std::move(values)));
	}
	return out;
}

CompositionReport composition_analysis(const Leaderboard& ensembles, int top_n) {
	if (top_n < 1) {
		throw std::invalid_argument("composition_analysis: top_n must be positive");
	}
	std::vector<std::pair<ensemble::EnsembleId, ensemble::CombinationMethod>> parsed;
	std::vector<double> smapes;
	for (const auto& row : ensembles.rows) {
		if (auto p = ensemble::parse_producer_label(row.producer)) {
			parsed.push_back(*p);
			smapes.push_back(row.mean_smape);
		}
	}

	CompositionReport report;
	report.top_n = top_n;
	if (static_cast<std::size_t>(top_n) > parsed.size()) {
		report.warnings.push_back("top_n " + std::to_string(top_n) + " exceeds the " +
		                          std::to_string(parsed.size()) + " ranked ensembles; clipped");
		report.top_n = static_cast<int>(parsed.size());
	}

	int slots = 0;
	for (int i = 0; i < report.top_n; ++i) {
		const auto& [id, method] = parsed[static_cast<std::size_t>(i)];
		for (int m : id.members) {
			++report.model_slots[static_cast<std::size_t>(m)];
			++slots;
		}
		++report.size_histogram[id.size()];
		++report.method_histogram[std::string(ensemble::name(method))];
	}
	for (std::size_t k = 0; k < 8; ++k) {
		report.model_share[k] = slots > 0 ? static_cast<double>(report.model_slots[k]) / slots : 0.0;
	}

	report.by_size = size_aggregates(ensembles);
	std::array<std::vector<double>, 8> member_groups;
	for (std::size_t i = 0; i < parsed.size(); ++i) {
		for (int m : parsed[i].first.members) {
			member_groups[static_cast<std::size_t>(m)].push_back(smapes[i]);
		}
	}
	for (std::size_t k = 0; k < 8; ++k) {
		report.by_member.push_back(aggregate(static_cast<int>(k), std::move(member_groups[k])));
	}
	return report;
}

ComparisonReport compare_best(std::span<const EvalRecord> individual, std::span<const EvalRecord> ensemble) {
	if (individual.empty() || ensemble.empty()) {
		throw DataError("compare_best: empty record set");
	}
	auto single_producer = [](std::span<const EvalRecord> recs) {
		for (const auto& r : recs) {
			if (r.producer != recs.front().producer) {
				throw std::invalid_argument("compare_best: records mix producers");
			}
		}
		return recs.front().producer;
	};
	ComparisonReport report;
	report.individual_producer = single_producer(individual);
	report.ensemble_producer = single_producer(ensemble);

	std::map<std::string, double> ind;
	for (const auto& r : individual) {
		ind[r.series_id] = r.smape;
	}
	std::map<std::string, double> ens;
	for (const auto& r : ensemble) {
		ens[r.series_id] = r.smape;
	}
	if (ind.size() != individual.size() || ens.size() != ensemble.size()) {
		throw DataError("compare_best: duplicate series in records");
	}
	if (ind.size() != ens.size()) {
		throw DataError("compare_best: series sets differ");
	}
	std::vector<double> improvements;
	std::vector<double> win_improvements;
	for (const auto& [sid, i_smape] : ind) {
		auto it = ens.find(sid);
		if (it == ens.end()) {
			throw DataError("compare_best: series " + sid + " missing from ensemble records");
		}
		ComparisonPoint pt{sid, i_smape, it->second, 0.0};
		if (i_smape > 0.0) {
			pt.improvement = (i_smape - pt.ensemble_smape) / i_smape * 100.0;
		} else {
			pt.improvement = pt.ensemble_smape == i_smape ? 0.0 : -100.0;
		}
		if (pt.ensemble_smape < i_smape) {
			++report.wins;
			win_improvements.push_back(pt.improvement);
		}
		improvements.push_back(pt.improvement);
		report.points.push_back(std::move(pt));
	}
	const auto n = static_cast<double>(report.points.size());
	report.win_fraction = report.wins / n;
	report.median_improvement_given_win = median_of(win_improvements);
	report.median_improvement = median_of(improvements);

	std::sort(improvements.begin(), improvements.end());
	for (std::size_t i = 0; i < improvements.size(); ++i) {
		if (i + 1 < improvements.size() && improvements[i + 1] == improvements[i]) {
			continue;
		}
		report.ecdf.emplace_back(improvements[i], static_cast<double>(i + 1) / n);
	}
	return report;
}

ComparisonReport compare_leaders(const CorpusEvaluation& evaluation) {
	if (!evaluation.ensemble || evaluation.ensemble->leaderboard.rows.empty() ||
	    evaluation.individual.leaderboard.rows.empty()) {
		throw DataError("compare_leaders: both leaderboards must be populated");
	}
	const auto& best_ind = evaluation.individual.leaderboard.rows.front().producer;
	const auto& best_ens = evaluation.ensemble->leaderboard.rows.front().producer;
	const auto ind = evaluation.individual.records_of(best_ind);
	const auto ens = evaluation.ensemble->records_of(best_ens);
	return compare_best(ind, ens);
}

int count_better_than(const Leaderboard& board, double threshold) {
	return static_cast<int>(
	    std::count_if(board.rows.begin(), board.rows.end(), [&](const auto& r) { return r.mean_smape < threshold; }));
}

} // namespace pqf::evaluation
