#include "pqforecast/core/errors.hpp"
#include "pqforecast/ensemble/combination.hpp"
#include "pqforecast/evaluation/analysis.hpp"
#include "pqforecast/evaluation/corpus.hpp"
#include "pqforecast/evaluation/metrics.hpp"
#include "pqforecast/evaluation/ranking.hpp"
#include "pqforecast/models/model_id.hpp"

#include <algorithm>
#include <cmath>
#include <doctest.h>
#include <numeric>
#include <random>

using namespace pqf;
using namespace pqf::evaluation;

namespace {

// Plain-loop reference implementations.
double oracle_mae(const std::vector<double>& a, const std::vector<double>& f) {
	long double s = 0;
	for (std::size_t i = 0; i < a.size(); ++i) {
		s += std::fabs(static_cast<long double>(a[i]) - f[i]);
	}
	return static_cast<double>(s / a.size());
}

std::vector<double> oracle_ranks(const std::vector<double>& s) {
	std::vector<double> r(s.size());
	for (std::size_t i = 0; i < s.size(); ++i) {
		int below = 0, equal = 0;
		for (double v : s) {
			below += v < s[i];
			equal += v == s[i];
		}
		r[i] = below + (equal + 1) / 2.0;
	}
	return r;
}

// The two-series, four-producer corpus also stored under tests/fixtures.
void hand_corpus(ForecastIndex& f, ActualIndex& a) {
	a["A"] = {100, 100};
	a["B"] = {50, 50};
	f["SNaive"]["A"] = {100, 100};
	f["HW"]["A"] = {50, 50};
	f["SARIMA"]["A"] = {100, 300};
	f["Prophet"]["A"] = {0, 100};
	f["SNaive"]["B"] = {25, 50};
	f["HW"]["B"] = {50, 50};
	f["SARIMA"]["B"] = {75, 75};
	f["Prophet"]["B"] = {50, 150};
}

Leaderboard board_of(const std::vector<std::pair<std::string, double>>& rows) {
	Leaderboard b;
	int rank = 1;
	for (const auto& [producer, smape] : rows) {
		b.rows.push_back({rank++, producer, 0.0, smape, 0.0, 0.0});
	}
	return b;
}

std::vector<EvalRecord> records(const std::string& producer, const std::vector<double>& smapes) {
	std::vector<EvalRecord> out;
	for (std::size_t i = 0; i < smapes.size(); ++i) {
		out.push_back({"S" + std::to_string(i), producer, 0.0, smapes[i], 1.0});
	}
	return out;
}

} // namespace

TEST_SUITE("metrics") {
	TEST_CASE("mae") {
		const std::vector<double> x{1, 2, 3};
		CHECK(mae(x, x) == 0.0);
		CHECK(mae(std::vector<double>(52, 0.0), std::vector<double>(52, 1.0)) == 1.0);
		CHECK_THROWS_AS(mae(x, std::vector<double>{1, 2}), std::invalid_argument);
		std::mt19937_64 rng(3);
		std::uniform_real_distribution<double> u(0.0, 100.0);
		for (int rep = 0; rep < 200; ++rep) {
			std::vector<double> a(52), f(52);
			for (std::size_t i = 0; i < 52; ++i) {
				a[i] = u(rng);
				f[i] = u(rng);
			}
			CHECK(std::abs(mae(a, f) - oracle_mae(a, f)) <= 1e-12);
		}
	}

	TEST_CASE("smape") {
		const std::vector<double> x{3, 0, 7};
		CHECK(smape(x, x) == 0.0);
		CHECK(smape(std::vector<double>(52, 0.0), std::vector<double>(52, 4.0)) == 200.0);
		CHECK(smape(std::vector<double>{100}, std::vector<double>{50}) == doctest::Approx(200.0 * 50.0 / 150.0));
		CHECK(smape(std::vector<double>{100}, std::vector<double>{50}) == doctest::Approx(66.667).epsilon(1e-5));
		CHECK(smape(std::vector<double>{0, 0}, std::vector<double>{0, 0}) == 0.0);
		CHECK_THROWS_AS(smape(x, std::vector<double>{1}), std::invalid_argument);
		std::mt19937_64 rng(4);
		std::uniform_real_distribution<double> u(0.0, 1.0);
		for (int rep = 0; rep < 500; ++rep) {
			std::vector<double> a(52), f(52);
			for (std::size_t i = 0; i < 52; ++i) {
				a[i] = u(rng) < 0.2 ? 0.0 : 100.0 * u(rng);
				f[i] = u(rng) < 0.2 ? 0.0 : 100.0 * u(rng);
			}
			const double s = smape(a, f);
			CHECK(s >= 0.0);
			CHECK(s <= 200.0);
		}
	}

	TEST_CASE("classification") {
		CHECK(classify_smape(9.99) == SmapeClass::Good);
		CHECK(classify_smape(10.0) == SmapeClass::Acceptable);
		CHECK(classify_smape(25.0) == SmapeClass::Acceptable);
		CHECK(classify_smape(25.01) == SmapeClass::Poor);
		CHECK(name(SmapeClass::Acceptable) == "acceptable");
	}

	TEST_CASE("benchmark ratio") {
		CHECK(benchmark_ratio(18.22, 20.88) == doctest::Approx(0.873).epsilon(5e-4 / 0.873));
		CHECK(std::round(benchmark_ratio(18.22, 20.88) * 1000.0) / 1000.0 == 0.873);
		CHECK(std::round(benchmark_ratio(17.68, 20.88) * 1000.0) / 1000.0 == 0.847);
		CHECK(benchmark_ratio(5.5, 5.5) == 1.0);
		CHECK_THROWS_AS(benchmark_ratio(3.0, 0.0), std::invalid_argument);
	}
}

TEST_SUITE("ranking") {
	TEST_CASE("examples") {
		CHECK(rank_within_series(std::vector<double>{5, 10, 20}) == std::vector<double>{1, 2, 3});
		CHECK(rank_within_series(std::vector<double>{5, 5, 20}) == std::vector<double>{1.5, 1.5, 3});
		CHECK(rank_within_series(std::vector<double>{20, 5, 5}) == std::vector<double>{3, 1.5, 1.5});
		CHECK(rank_within_series(std::vector<double>(5, 2.0)) == std::vector<double>(5, 3.0));
	}

	TEST_CASE("random ties against the counting oracle") {
		std::mt19937_64 rng(8);
		std::uniform_int_distribution<int> v(0, 6);
		for (int rep = 0; rep < 500; ++rep) {
			std::vector<double> s(2 + rep % 15);
			for (auto& x : s) {
				x = v(rng);
			}
			const auto r = rank_within_series(s);
			CHECK(r == oracle_ranks(s));
			const double n = static_cast<double>(s.size());
			CHECK(std::accumulate(r.begin(), r.end(), 0.0) == n * (n + 1) / 2);
		}
	}
}

TEST_SUITE("corpus") {
	TEST_CASE("single series") {
		ForecastIndex f;
		ActualIndex a;
		a["X"] = {100};
		f["SNaive"]["X"] = {90};
		f["HW"]["X"] = {50};
		const auto e = evaluate_corpus(f, a);
		const auto& b = e.individual.leaderboard;
		REQUIRE(b.rows.size() == 2);
		CHECK(b.rows[0].producer == "SNaive");
		CHECK(b.rows[0].mean_rank == 1.0);
		CHECK(b.rows[1].mean_rank == 2.0);
		CHECK(b.rows[0].benchmark_ratio == 1.0);
		CHECK(b.rows[1].benchmark_ratio == doctest::Approx(smape(a["X"], f["HW"]["X"]) / smape(a["X"], f["SNaive"]["X"])));
		CHECK_FALSE(e.ensemble.has_value());
	}

	TEST_CASE("hand corpus") {
		ForecastIndex f;
		ActualIndex a;
		hand_corpus(f, a);
		const auto e = evaluate_corpus(f, a);
		const auto& rows = e.individual.leaderboard.rows;
		REQUIRE(rows.size() == 4);
		struct Want {
			const char* producer;
			double mae, smape, rank, br;
		};
		const Want want[] = {{"SNaive", 6.25, 50.0 / 3.0, 1.5, 1.0},
		                     {"HW", 25.0, 100.0 / 3.0, 2.0, 2.0},
		                     {"SARIMA", 62.5, 45.0, 2.5, 2.7},
		                     {"Prophet", 50.0, 75.0, 4.0, 4.5}};
		for (std::size_t i = 0; i < 4; ++i) {
			CAPTURE(i);
			CHECK(rows[i].rank == static_cast<int>(i) + 1);
			CHECK(rows[i].producer == want[i].producer);
			CHECK(rows[i].mean_mae == doctest::Approx(want[i].mae).epsilon(1e-14));
			CHECK(rows[i].mean_smape == doctest::Approx(want[i].smape).epsilon(1e-14));
			CHECK(rows[i].mean_rank == doctest::Approx(want[i].rank).epsilon(1e-14));
			CHECK(rows[i].benchmark_ratio == doctest::Approx(want[i].br).epsilon(1e-14));
		}
		CHECK(rows[0].benchmark_ratio == 1.0);
		CHECK(e.individual.records.size() == 8);
		CHECK(e.individual.records_of("HW").size() == 2);
	}

	TEST_CASE("missing forecast names series and producer") {
		ForecastIndex f;
		ActualIndex a;
		hand_corpus(f, a);
		f["HW"].erase("B");
		CHECK_THROWS_AS(evaluate_corpus(f, a), DataError);
		try {
			evaluate_corpus(f, a);
		} catch (const DataError& err) {
			const std::string msg = err.what();
			CHECK(msg.find("B") != std::string::npos);
			CHECK(msg.find("HW") != std::string::npos);
		}
	}

	TEST_CASE("misaligned inputs") {
		ForecastIndex f;
		ActualIndex a;
		hand_corpus(f, a);
		f["HW"]["C"] = {1, 2};
		CHECK_THROWS_AS(evaluate_corpus(f, a), DataError);
		hand_corpus(f, a);
		f["HW"].erase("C");
		f["HW"]["A"] = {1, 2, 3};
		CHECK_THROWS_AS(evaluate_corpus(f, a), DataError);
	}

	TEST_CASE("invariant to series and producer order") {
		std::mt19937_64 rng(12);
		std::uniform_real_distribution<double> u(1.0, 100.0);
		ForecastIndex f;
		ActualIndex a;
		const std::vector<std::string> producers{"SNaive", "HW", "SARIMA", "Prophet", "STL-ES"};
		for (int s = 0; s < 30; ++s) {
			const std::string id = "S" + std::to_string(100 + s);
			for (int h = 0; h < 52; ++h) {
				a[id].push_back(u(rng));
			}
			for (const auto& p : producers) {
				for (int h = 0; h < 52; ++h) {
					f[p][id].push_back(u(rng));
				}
			}
		}
		// Rename series and producers so that their sort order reverses.
		ForecastIndex f2;
		ActualIndex a2;
		auto flip = [](const std::string& id) { return "T" + std::to_string(300 - std::stoi(id.substr(1))); };
		for (const auto& [id, v] : a) {
			a2[flip(id)] = v;
		}
		for (const auto& [p, per] : f) {
			for (const auto& [id, v] : per) {
				f2[p][flip(id)] = v;
			}
		}
		const auto e1 = evaluate_corpus(f, a);
		const auto e2 = evaluate_corpus(f2, a2, 3);
		REQUIRE(e1.individual.leaderboard.rows.size() == e2.individual.leaderboard.rows.size());
		for (std::size_t i = 0; i < e1.individual.leaderboard.rows.size(); ++i) {
			const auto& r1 = e1.individual.leaderboard.rows[i];
			const auto& r2 = e2.individual.leaderboard.rows[i];
			CHECK(r1.producer == r2.producer);
			CHECK(r1.mean_smape == doctest::Approx(r2.mean_smape).epsilon(1e-13));
			CHECK(r1.mean_mae == doctest::Approx(r2.mean_mae).epsilon(1e-13));
			CHECK(r1.mean_rank == doctest::Approx(r2.mean_rank).epsilon(1e-13));
			CHECK(r1.mean_rank >= 1.0);
			CHECK(r1.mean_rank <= 5.0);
		}
	}

	TEST_CASE("ensemble cohort includes the individual models") {
		std::mt19937_64 rng(21);
		std::uniform_real_distribution<double> u(1.0, 100.0);
		ForecastIndex f;
		ActualIndex a;
		for (int s = 0; s < 12; ++s) {
			const std::string id = "S" + std::to_string(s);
			for (int h = 0; h < 52; ++h) {
				a[id].push_back(u(rng));
			}
			std::vector<models::Forecast> members;
			for (auto m : models::kPublicModels) {
				std::vector<double> v(52);
				for (auto& x : v) {
					x = u(rng);
				}
				f[std::string(models::name(m))][id] = v;
				members.push_back({id, std::string(models::name(m)), v});
			}
			const std::vector<ensemble::CombinationMethod> methods{ensemble::CombinationMethod::Mean,
			                                                       ensemble::CombinationMethod::Median};
			for (const auto& c : ensemble::build_ensembles(members, methods, nullptr)) {
				f[c.producer][id] = c.values;
			}
		}
		const auto e = evaluate_corpus(f, a);
		REQUIRE(e.ensemble.has_value());
		CHECK(e.individual.leaderboard.rows.size() == 8);
		CHECK(e.ensemble->producers.size() == 247 * 2 + 8);
		CHECK(e.ensemble->leaderboard.rows.size() == 247 * 2);
		for (const auto& row : e.ensemble->leaderboard.rows) {
			CHECK(is_ensemble_producer(row.producer));
			CHECK(row.mean_rank >= 1.0);
			CHECK(row.mean_rank <= 502.0);
		}
		for (const auto& row : e.individual.leaderboard.rows) {
			CHECK(row.mean_rank <= 8.0);
		}
		const auto* snaive = e.individual.leaderboard.find("SNaive");
		REQUIRE(snaive != nullptr);
		CHECK(snaive->benchmark_ratio == 1.0);

		// corpus MAE of MEAN ensembles against the members' corpus MAEs
		for (const auto& id : ensemble::enumerate_ensembles()) {
			const auto* row = e.ensemble->leaderboard.find(ensemble::producer_label(id, ensemble::CombinationMethod::Mean));
			REQUIRE(row != nullptr);
			double members_mae = 0.0;
			for (int m : id.members) {
				members_mae +=
				    e.individual.leaderboard.find(models::name(models::kPublicModels[static_cast<std::size_t>(m)]))->mean_mae;
			}
			CHECK(row->mean_mae <= members_mae / id.size() + 1e-12);
		}

		const auto phi = phi_from_leaderboard(e.individual.leaderboard);
		CHECK(phi.mean_smape[0] == snaive->mean_smape);
		const auto loo = leave_one_out_phi(e.individual);
		CHECK(loo.size() == 12);
		Leaderboard partial = e.individual.leaderboard;
		partial.rows.pop_back();
		CHECK_THROWS_AS(phi_from_leaderboard(partial), DataError);
	}

	TEST_CASE("leave-one-out phi") {
		ForecastIndex f;
		ActualIndex a;
		std::mt19937_64 rng(5);
		std::uniform_real_distribution<double> u(1.0, 100.0);
		for (int s = 0; s < 4; ++s) {
			const std::string id = "S" + std::to_string(s);
			a[id] = {u(rng), u(rng)};
			for (auto m : models::kPublicModels) {
				f[std::string(models::name(m))][id] = {u(rng), u(rng)};
			}
		}
		const auto e = evaluate_corpus(f, a);
		const auto loo = leave_one_out_phi(e.individual);
		for (const auto& [series, table] : loo) {
			for (std::size_t m = 0; m < 8; ++m) {
				double sum = 0.0, rank_sum = 0.0;
				for (const auto& r : e.individual.records) {
					if (r.series_id != series && r.producer == models::name(models::kPublicModels[m])) {
						sum += r.smape;
						rank_sum += r.rank;
					}
				}
				CHECK(table.mean_smape[m] == doctest::Approx(sum / 3.0).epsilon(1e-13));
				CHECK(table.mean_rank[m] == doctest::Approx(rank_sum / 3.0).epsilon(1e-13));
			}
		}
	}
}

TEST_SUITE("analysis") {
	TEST_CASE("top one") {
		const auto board = board_of({{"D28:median", 5.0}, {"B01:mean", 6.0}, {"H01:rank", 7.0}});
		const auto r = composition_analysis(board, 1);
		const auto d28 = ensemble::parse_ensemble_label("D28");
		int slots = 0;
		for (std::size_t m = 0; m < 8; ++m) {
			const bool member = std::find(d28->members.begin(), d28->members.end(), static_cast<int>(m)) !=
			                    d28->members.end();
			CHECK(r.model_slots[m] == (member ? 1 : 0));
			CHECK(r.model_share[m] == doctest::Approx(member ? 0.25 : 0.0));
			slots += r.model_slots[m];
		}
		CHECK(slots == 4);
		CHECK(r.size_histogram == std::map<int, int>{{4, 1}});
		CHECK(r.method_histogram == std::map<std::string, int>{{"median", 1}});
		CHECK(r.warnings.empty());
	}

	TEST_CASE("size-4 dominated cohort") {
		std::vector<std::pair<std::string, double>> rows;
		double s = 1.0;
		for (const auto& id : ensemble::enumerate_ensembles()) {
			if (id.size() == 4) {
				rows.push_back({ensemble::producer_label(id, ensemble::CombinationMethod::Mean), s});
				s += 0.01;
			}
		}
		for (const auto& id : ensemble::enumerate_ensembles()) {
			for (auto m : ensemble::kAllMethods) {
				if (id.size() != 4 || m != ensemble::CombinationMethod::Mean) {
					rows.push_back({ensemble::producer_label(id, m), s});
					s += 0.01;
				}
			}
		}
		const auto board = board_of(rows);
		REQUIRE(board.rows.size() == 988);
		const auto r = composition_analysis(board, 100);
		const auto mode = std::max_element(r.size_histogram.begin(), r.size_histogram.end(),
		                                   [](const auto& x, const auto& y) { return x.second < y.second; });
		CHECK(mode->first == 4);
		int methods = 0;
		for (const auto& [k, v] : r.method_histogram) {
			methods += v;
		}
		CHECK(methods == 100);
		REQUIRE(r.by_size.size() == 7);
		CHECK(r.by_size[2].key == 4);
		CHECK(r.by_size[2].count == 280);
		CHECK(r.by_size[2].min == 1.0);
		CHECK(r.by_size[6].count == 4);
		CHECK(r.by_member.size() == 8);
		const auto mean_only = size_aggregates(board, ensemble::CombinationMethod::Mean);
		REQUIRE(mean_only.size() == 7);
		CHECK(mean_only[0].count == 28);

		const auto clipped = composition_analysis(board, 5000);
		CHECK(clipped.top_n == 988);
		CHECK_FALSE(clipped.warnings.empty());
		CHECK_THROWS(composition_analysis(board, 0));
	}

	TEST_CASE("group quartiles") {
		const auto board = board_of({{"B01:mean", 1.0}, {"B02:mean", 2.0}, {"B03:mean", 3.0}, {"B04:mean", 4.0},
		                             {"C01:mean", 10.0}});
		const auto g = size_aggregates(board);
		REQUIRE(g.size() == 2);
		CHECK(g[0].key == 2);
		CHECK(g[0].mean == 2.5);
		CHECK(g[0].median == 2.5);
		CHECK(g[0].p25 == 1.75);
		CHECK(g[0].p75 == 3.25);
		CHECK(g[1].count == 1);
		CHECK(g[1].min == 10.0);
		CHECK(g[1].max == 10.0);
	}

	TEST_CASE("compare_best") {
		const auto ind = records("STL-ARIMA", {10, 10, 10, 10, 10, 10, 10, 10, 10, 10});
		const auto ens = records("D28:median", {9, 8, 5, 9.5, 9, 7, 10, 12, 11, 20});
		const auto r = compare_best(ind, ens);
		CHECK(r.wins == 6);
		CHECK(r.win_fraction == doctest::Approx(0.6));
		CHECK(r.points.size() == 10);
		// improvements on wins: 10, 20, 50, 5, 10, 30 -> median 15
		CHECK(r.median_improvement_given_win == doctest::Approx(15.0));
		CHECK(r.points[9].improvement == doctest::Approx(-100.0));
		CHECK(r.ecdf.back().second == doctest::Approx(1.0));
		for (std::size_t i = 1; i < r.ecdf.size(); ++i) {
			CHECK(r.ecdf[i].first > r.ecdf[i - 1].first);
			CHECK(r.ecdf[i].second > r.ecdf[i - 1].second);
		}

		const auto all_better = compare_best(ind, records("X:mean", std::vector<double>(10, 1.0)));
		CHECK(all_better.win_fraction == 1.0);

		const auto same = compare_best(ind, records("X:mean", std::vector<double>(10, 10.0)));
		CHECK(same.win_fraction == 0.0);
		CHECK(std::isnan(same.median_improvement_given_win));
		for (const auto& p : same.points) {
			CHECK(p.improvement == 0.0);
		}

		auto fewer = ens;
		fewer.pop_back();
		CHECK_THROWS_AS(compare_best(ind, fewer), DataError);
		auto renamed = ens;
		renamed[0].series_id = "Z";
		CHECK_THROWS_AS(compare_best(ind, renamed), DataError);
	}

	TEST_CASE("count_better_than is strict") {
		const auto board = board_of({{"A:mean", 18.10}, {"B:mean", 18.19}, {"C:mean", 18.22}, {"D:mean", 18.3}});
		CHECK(count_better_than(board, 18.22) == 2);
		CHECK(count_better_than(board, 100.0) == 4);
		CHECK(count_better_than(board, 1.0) == 0);
	}
}
