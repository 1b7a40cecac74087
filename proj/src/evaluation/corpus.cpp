#include "pqforecast/evaluation/corpus.hpp"

#include "pqforecast/core/errors.hpp"
#include "pqforecast/core/parallel.hpp"
#include "pqforecast/evaluation/metrics.hpp"
#include "pqforecast/evaluation/ranking.hpp"
#include "pqforecast/models/model_id.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pqf::evaluation {

const LeaderboardRow* Leaderboard::find(std::string_view producer) const {
	for (const auto& row : rows) {
		if (row.producer == producer) {
			return &row;
		}
	}
	return nullptr;
}

std::vector<EvalRecord> CohortResult::records_of(std::string_view producer) const {
	std::vector<EvalRecord> out;
	out.reserve(series.size());
	for (const auto& r : records) {
		if (r.producer == producer) {
			out.push_back(r);
		}
	}
	return out;
}

bool is_ensemble_producer(std::string_view producer) {
	return ensemble::parse_producer_label(producer).has_value();
}

CohortResult evaluate_cohort(const ForecastIndex& forecasts, const ActualIndex& actuals,
                             std::vector<std::string> cohort, const std::vector<std::string>& listed,
                             std::string_view benchmark, int jobs) {
	if (actuals.empty()) {
		throw DataError("no series to evaluate");
	}
	std::sort(cohort.begin(), cohort.end());
	cohort.erase(std::unique(cohort.begin(), cohort.end()), cohort.end());
	if (cohort.empty()) {
		throw DataError("no producers to evaluate");
	}

	CohortResult result;
	result.producers = cohort;
	for (const auto& [sid, _] : actuals) {
		result.series.push_back(sid);
	}

	std::vector<const std::map<std::string, std::vector<double>>*> by_producer;
	for (const auto& p : cohort) {
		auto it = forecasts.find(p);
		if (it == forecasts.end()) {
			throw DataError("missing forecasts for producer " + p);
		}
		for (const auto& [sid, values] : it->second) {
			auto a = actuals.find(sid);
			if (a == actuals.end()) {
				throw DataError("forecast for unknown series " + sid + " (producer " + p + ")");
			}
			if (values.size() != a->second.size()) {
				throw DataError("horizon mismatch for series " + sid + ", producer " + p);
			}
		}
		for (const auto& sid : result.series) {
			if (!it->second.contains(sid)) {
				throw DataError("missing forecast for series " + sid + ", producer " + p);
			}
		}
		by_producer.push_back(&it->second);
	}

	const std::size_t ns = result.series.size();
	const std::size_t np = cohort.size();
	result.records.resize(ns * np);
	core::parallel_for(ns, jobs, [&](std::size_t s) {
		const auto& sid = result.series[s];
		const auto& actual = actuals.at(sid);
		std::vector<double> scores(np);
		for (std::size_t p = 0; p < np; ++p) {
			const auto& fc = by_producer[p]->at(sid);
			auto& rec = result.records[s * np + p];
			rec.series_id = sid;
			rec.producer = cohort[p];
			rec.mae = mae(actual, fc);
			rec.smape = smape(actual, fc);
			scores[p] = rec.smape;
		}
		const auto ranks = rank_within_series(scores);
		for (std::size_t p = 0; p < np; ++p) {
			result.records[s * np + p].rank = ranks[p];
		}
	});

	std::vector<LeaderboardRow> rows(np);
	for (std::size_t p = 0; p < np; ++p) {
		double sm = 0.0, sa = 0.0, sr = 0.0;
		for (std::size_t s = 0; s < ns; ++s) {
			const auto& rec = result.records[s * np + p];
			sa += rec.mae;
			sm += rec.smape;
			sr += rec.rank;
		}
		const auto n = static_cast<double>(ns);
		rows[p].producer = cohort[p];
		rows[p].mean_mae = sa / n;
		rows[p].mean_smape = sm / n;
		rows[p].mean_rank = sr / n;
	}

	auto bench = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.producer == benchmark; });
	if (bench == rows.end()) {
		throw DataError("benchmark producer " + std::string(benchmark) + " is not part of the evaluated cohort");
	}
	const double bench_smape = bench->mean_smape;
	if (!(bench_smape > 0.0)) {
		throw DataError("benchmark producer " + std::string(benchmark) + " has zero mean sMAPE");
	}
	for (auto& r : rows) {
		r.benchmark_ratio = r.producer == benchmark ? 1.0 : benchmark_ratio(r.mean_smape, bench_smape);
	}

	if (!listed.empty()) {
		const std::set<std::string> keep(listed.begin(), listed.end());
		std::erase_if(rows, [&](const auto& r) { return !keep.contains(r.producer); });
	}
	std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
		if (a.mean_smape != b.mean_smape) {
			return a.mean_smape < b.mean_smape;
		}
		return a.producer < b.producer;
	});
	for (std::size_t i = 0; i < rows.size(); ++i) {
		rows[i].rank = static_cast<int>(i) + 1;
	}
	result.leaderboard.rows = std::move(rows);
	return result;
}

CorpusEvaluation evaluate_corpus(const ForecastIndex& forecasts, const ActualIndex& actuals, int jobs) {
	std::vector<std::string> individual;
	std::vector<std::string> ensembles;
	for (const auto& [producer, _] : forecasts) {
		(is_ensemble_producer(producer) ? ensembles : individual).push_back(producer);
	}
	CorpusEvaluation out;
	out.individual = evaluate_cohort(forecasts, actuals, individual, {}, kBenchmarkProducer, jobs);
	if (!ensembles.empty()) {
		std::vector<std::string> all = individual;
		all.insert(all.end(), ensembles.begin(), ensembles.end());
		out.ensemble = evaluate_cohort(forecasts, actuals, all, ensembles, kBenchmarkProducer, jobs);
	}
	return out;
}

ensemble::PhiTable phi_from_leaderboard(const Leaderboard& individual) {
	ensemble::PhiTable phi;
	for (std::size_t k = 0; k < models::kPublicModels.size(); ++k) {
		const auto model = std::string(models::name(models::kPublicModels[k]));
		const auto* row = individual.find(model);
		if (row == nullptr) {
			throw DataError("individual leaderboard has no row for " + model);
		}
		phi.mean_smape[k] = row->mean_smape;
		phi.mean_rank[k] = row->mean_rank;
	}
	return phi;
}

std::map<std::string, ensemble::PhiTable> leave_one_out_phi(const CohortResult& individual) {
	const std::size_t ns = individual.series.size();
	const std::size_t np = individual.producers.size();
	if (ns < 2) {
		throw DataError("leave-one-out weights need at least two series");
	}
	std::array<std::size_t, 8> column{};
	for (std::size_t k = 0; k < models::kPublicModels.size(); ++k) {
		const auto model = models::name(models::kPublicModels[k]);
		auto it = std::find(individual.producers.begin(), individual.producers.end(), model);
		if (it == individual.producers.end()) {
			throw DataError("individual cohort has no results for " + std::string(model));
		}
		column[k] = static_cast<std::size_t>(it - individual.producers.begin());
	}
	std::array<double, 8> total_smape{}, total_rank{};
	for (std::size_t s = 0; s < ns; ++s) {
		for (std::size_t k = 0; k < 8; ++k) {
			const auto& rec = individual.records[s * np + column[k]];
			total_smape[k] += rec.smape;
			total_rank[k] += rec.rank;
		}
	}
	std::map<std::string, ensemble::PhiTable> out;
	const auto n = static_cast<double>(ns - 1);
	for (std::size_t s = 0; s < ns; ++s) {
		ensemble::PhiTable phi;
		for (std::size_t k = 0; k < 8; ++k) {
			const auto& rec = individual.records[s * np + column[k]];
			phi.mean_smape[k] = (total_smape[k] - rec.smape) / n;
			phi.mean_rank[k] = (total_rank[k] - rec.rank) / n;
		}
		out.emplace(individual.series[s], phi);
	}
	return out;
}

} // namespace pqf::evaluation
