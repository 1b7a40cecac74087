#include "pqforecast/ensemble/combination.hpp"
#include "pqforecast/ensemble/ensemble_id.hpp"
#include "pqforecast/evaluation/metrics.hpp"
#include "pqforecast/models/model_id.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <doctest.h>
#include <map>
#include <numeric>
#include <random>

using namespace pqf;
using namespace pqf::ensemble;
using models::Forecast;

namespace {

std::vector<Forecast> members_of(const std::vector<std::vector<double>>& values) {
	std::vector<Forecast> out;
	for (std::size_t i = 0; i < values.size(); ++i) {
		out.push_back({"S", "M" + std::to_string(i), values[i]});
	}
	return out;
}

} // namespace

TEST_SUITE("enumeration") {
	TEST_CASE("counts per size") {
		const auto& all = enumerate_ensembles();
		CHECK(all.size() == 247);
		// Pascal's triangle row 8
		std::vector<std::vector<int>> pascal{{1}};
		for (int n = 1; n <= 8; ++n) {
			std::vector<int> row(static_cast<std::size_t>(n + 1), 1);
			for (int k = 1; k < n; ++k) {
				row[static_cast<std::size_t>(k)] =
				    pascal.back()[static_cast<std::size_t>(k - 1)] + pascal.back()[static_cast<std::size_t>(k)];
			}
			pascal.push_back(row);
		}
		std::map<char, int> count;
		for (const auto& e : all) {
			++count[e.letter];
			CHECK(e.letter == 'A' + e.size() - 1);
		}
		CHECK(count['B'] == 28);
		CHECK(count['C'] == 56);
		for (int k = 2; k <= 8; ++k) {
			CHECK(count[static_cast<char>('A' + k - 1)] == pascal[8][static_cast<std::size_t>(k)]);
		}
		CHECK(count['D'] == 70);
		CHECK(count['E'] == 56);
		CHECK(count['F'] == 28);
		CHECK(count['G'] == 8);
		CHECK(count['H'] == 1);
	}

	TEST_CASE("lexicographic order matches a bitmask oracle") {
		std::vector<std::vector<int>> oracle;
		for (int size = 2; size <= 8; ++size) {
			std::vector<std::vector<int>> group;
			for (unsigned mask = 0; mask < 256; ++mask) {
				if (std::popcount(mask) != size) {
					continue;
				}
				std::vector<int> m;
				for (int b = 0; b < 8; ++b) {
					if (mask & (1u << b)) {
						m.push_back(b);
					}
				}
				group.push_back(m);
			}
			std::sort(group.begin(), group.end());
			oracle.insert(oracle.end(), group.begin(), group.end());
		}
		const auto& all = enumerate_ensembles();
		REQUIRE(all.size() == oracle.size());
		for (std::size_t i = 0; i < all.size(); ++i) {
			CHECK(all[i].members == oracle[i]);
		}
		CHECK(all.front().label() == "B01");
		CHECK(all.front().members == std::vector<int>{0, 1});
		CHECK(all[27].label() == "B28");
		CHECK(all[28].label() == "C01");
		CHECK(all.back().label() == "H01");
		CHECK(all.back().members == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
	}

	TEST_CASE("labels and member sets round-trip") {
		for (const auto& e : enumerate_ensembles()) {
			const auto parsed = parse_ensemble_label(e.label());
			REQUIRE(parsed.has_value());
			CHECK(*parsed == e);
			auto shuffled = e.members;
			std::reverse(shuffled.begin(), shuffled.end());
			const auto found = ensemble_from_members(shuffled);
			REQUIRE(found.has_value());
			CHECK(*found == e);
			for (auto m : kAllMethods) {
				const auto back = parse_producer_label(producer_label(e, m));
				REQUIRE(back.has_value());
				CHECK(back->first == e);
				CHECK(back->second == m);
			}
		}
		CHECK_FALSE(parse_ensemble_label("B29").has_value());
		CHECK_FALSE(parse_ensemble_label("H02").has_value());
		CHECK_FALSE(parse_ensemble_label("A01").has_value());
		CHECK_FALSE(parse_producer_label("D28:mode").has_value());
		CHECK_FALSE(ensemble_from_members({3}).has_value());
		CHECK(producer_label(*parse_ensemble_label("D28"), CombinationMethod::Median) == "D28:median");
	}

	TEST_CASE("method names") {
		CHECK(name(CombinationMethod::Mean) == "mean");
		CHECK(name(CombinationMethod::Median) == "median");
		CHECK(name(CombinationMethod::SmapeWeighted) == "smape");
		CHECK(name(CombinationMethod::RankWeighted) == "rank");
		CHECK(is_weighted(CombinationMethod::RankWeighted));
		CHECK_FALSE(is_weighted(CombinationMethod::Median));
		CHECK(std::size(kAllMethods) * enumerate_ensembles().size() == 988);
	}

	TEST_CASE("member names") {
		const auto e = ensemble_from_members({0, 2, 5, 7});
		REQUIRE(e.has_value());
		CHECK(member_names(*e) == "SNaive+SARIMA+STL-ES+STL-ARIMA");
	}
}

TEST_SUITE("weights") {
	TEST_CASE("symmetric") {
		const auto w = compute_weights(std::vector<double>{4.2, 4.2, 4.2});
		for (double v : w) {
			CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
		}
	}

	TEST_CASE("hand values") {
		const auto w = compute_weights(std::vector<double>{1.0, 2.0});
		CHECK(w[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
		CHECK(w[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

		// published mean sMAPE of STL-ARIMA and SNaive
		const double a = 18.22, b = 20.88;
		const auto v = compute_weights(std::vector<double>{a, b});
		const double oracle_a = b / (a + b); // (1/a) / (1/a + 1/b)
		CHECK(v[0] == doctest::Approx(oracle_a).epsilon(1e-12));
		CHECK(v[0] == doctest::Approx(0.534).epsilon(1e-3));
		CHECK(v[1] == doctest::Approx(0.466).epsilon(1e-3));
	}

	TEST_CASE("sum to one, positive, decreasing in phi") {
		std::mt19937_64 rng(1);
		std::uniform_real_distribution<double> u(0.1, 50.0);
		for (int rep = 0; rep < 500; ++rep) {
			std::vector<double> phi(2 + rep % 7);
			for (auto& p : phi) {
				p = u(rng);
			}
			const auto w = compute_weights(phi);
			CHECK(std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) <= 1e-12);
			for (std::size_t i = 0; i < w.size(); ++i) {
				CHECK(w[i] > 0.0);
				for (std::size_t j = 0; j < w.size(); ++j) {
					if (phi[i] < phi[j]) {
						CHECK(w[i] > w[j]);
					}
				}
			}
		}
	}

	TEST_CASE("invalid phi") {
		CHECK_THROWS_AS(compute_weights(std::vector<double>{1.0, 0.0}), std::invalid_argument);
		CHECK_THROWS_AS(compute_weights(std::vector<double>{1.0, -2.0}), std::invalid_argument);
		CHECK_THROWS_AS(compute_weights(std::vector<double>{1.0, std::nan("")}), std::invalid_argument);
		CHECK_THROWS_AS(compute_weights(std::vector<double>{}), std::invalid_argument);
	}
}

TEST_SUITE("combine") {
	TEST_CASE("hand examples") {
		const auto two = members_of({{10.0}, {20.0}});
		CHECK(combine(two, CombinationMethod::Mean).values == std::vector<double>{15.0});
		CHECK(combine(two, CombinationMethod::Median).values == std::vector<double>{15.0});
		const std::vector<double> phi{1.0, 2.0};
		CHECK(combine(two, CombinationMethod::SmapeWeighted, phi).values[0] ==
		      doctest::Approx(10.0 * 2.0 / 3.0 + 20.0 / 3.0).epsilon(1e-14));
		CHECK(combine(two, CombinationMethod::SmapeWeighted, phi).values[0] == doctest::Approx(13.333).epsilon(1e-4));
		CHECK(combine(two, CombinationMethod::RankWeighted, phi).values[0] == doctest::Approx(40.0 / 3.0));
		const auto three = members_of({{1.0}, {100.0}, {2.0}});
		CHECK(combine(three, CombinationMethod::Median).values == std::vector<double>{2.0});
		const auto four = members_of({{1.0}, {100.0}, {2.0}, {7.0}});
		CHECK(combine(four, CombinationMethod::Median).values == std::vector<double>{4.5});
	}

	TEST_CASE("errors") {
		const auto one = members_of({{1.0, 2.0}});
		CHECK_THROWS_AS(combine(one, CombinationMethod::Mean), std::invalid_argument);
		auto two = members_of({{1.0, 2.0}, {3.0, 4.0}});
		CHECK_THROWS_AS(combine(two, CombinationMethod::SmapeWeighted), std::invalid_argument);
		CHECK_THROWS_AS(combine(two, CombinationMethod::RankWeighted, std::vector<double>{1.0}),
		                std::invalid_argument);
		auto other_series = two;
		other_series[1].series_id = "T";
		CHECK_THROWS_AS(combine(other_series, CombinationMethod::Mean), std::invalid_argument);
		auto short_one = two;
		short_one[1].values.pop_back();
		CHECK_THROWS_AS(combine(short_one, CombinationMethod::Mean), std::invalid_argument);
	}

	TEST_CASE("properties on random member sets") {
		std::mt19937_64 rng(77);
		std::uniform_real_distribution<double> u(0.0, 100.0);
		std::uniform_int_distribution<int> msize(2, 8);
		for (int rep = 0; rep < 300; ++rep) {
			const int m = msize(rng);
			std::vector<std::vector<double>> values(static_cast<std::size_t>(m), std::vector<double>(52));
			std::vector<double> phi(static_cast<std::size_t>(m));
			for (auto& v : values) {
				for (auto& x : v) {
					x = u(rng);
				}
			}
			for (auto& p : phi) {
				p = 1.0 + u(rng);
			}
			std::vector<double> actual(52);
			for (auto& a : actual) {
				a = u(rng);
			}
			const auto members = members_of(values);

			std::vector<std::size_t> perm(static_cast<std::size_t>(m));
			std::iota(perm.begin(), perm.end(), 0);
			std::shuffle(perm.begin(), perm.end(), rng);
			std::vector<Forecast> permuted;
			std::vector<double> permuted_phi;
			for (auto i : perm) {
				permuted.push_back(members[i]);
				permuted_phi.push_back(phi[i]);
			}

			for (auto method : kAllMethods) {
				const auto c = combine(members, method, phi);
				const auto p = combine(permuted, method, permuted_phi);
				REQUIRE(c.values.size() == 52);
				for (std::size_t h = 0; h < 52; ++h) {
					double lo = values[0][h], hi = values[0][h];
					for (const auto& v : values) {
						lo = std::min(lo, v[h]);
						hi = std::max(hi, v[h]);
					}
					REQUIRE(c.values[h] >= lo);
					REQUIRE(c.values[h] <= hi);
					if (method == CombinationMethod::Median) {
						REQUIRE(p.values[h] == c.values[h]);
					} else {
						REQUIRE(std::abs(p.values[h] - c.values[h]) <= 1e-12 * std::max(1.0, hi));
					}
				}
			}

			const std::vector<double> equal_phi(static_cast<std::size_t>(m), 3.7);
			const auto mean = combine(members, CombinationMethod::Mean);
			const auto weighted = combine(members, CombinationMethod::SmapeWeighted, equal_phi);
			for (std::size_t h = 0; h < 52; ++h) {
				REQUIRE(std::abs(mean.values[h] - weighted.values[h]) <= 1e-12 * std::max(1.0, mean.values[h]));
			}

			double member_mae = 0.0;
			for (const auto& v : values) {
				member_mae += evaluation::mae(actual, v);
			}
			member_mae /= m;
			CHECK(evaluation::mae(actual, mean.values) <= member_mae + 1e-12);
		}
	}

	TEST_CASE("build_ensembles covers every label") {
		std::vector<Forecast> members;
		for (int i = 0; i < 8; ++i) {
			members.push_back({"S", std::string(models::name(models::kPublicModels[static_cast<std::size_t>(i)])),
			                   std::vector<double>(52, 10.0 * (i + 1))});
		}
		PhiTable phi;
		for (int i = 0; i < 8; ++i) {
			phi.mean_smape[static_cast<std::size_t>(i)] = 10.0 + i;
			phi.mean_rank[static_cast<std::size_t>(i)] = 1.0 + i;
		}
		const auto out = build_ensembles(members, kAllMethods, &phi);
		REQUIRE(out.size() == 988);
		CHECK(out.front().producer == "B01:mean");
		CHECK(out.front().values[0] == 15.0);
		CHECK(out.back().producer == "H01:rank");
		const std::vector<CombinationMethod> unweighted{CombinationMethod::Mean};
		CHECK(build_ensembles(members, unweighted, nullptr).size() == 247);
		CHECK_THROWS_AS(build_ensembles(members, kAllMethods, nullptr), std::invalid_argument);
	}
}
