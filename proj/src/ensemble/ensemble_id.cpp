#include "pqforecast/ensemble/ensemble_id.hpp"

#include "pqforecast/models/model_id.hpp"

#include <algorithm>
#include <charconv>

namespace pqf::ensemble {

namespace {

constexpr int kModels = 8;

std::vector<EnsembleId> build() {
	std::vector<EnsembleId> out;
	for (int k = 2; k <= kModels; ++k) {
		// Lexicographic k-combinations of 0..7.
		std::vector<int> comb(static_cast<std::size_t>(k));
		for (int i = 0; i < k; ++i) {
			comb[static_cast<std::size_t>(i)] = i;
		}
		int index = 0;
		while (true) {
			out.push_back({static_cast<char>('A' + k - 1), ++index, comb});
			int i = k - 1;
			while (i >= 0 && comb[static_cast<std::size_t>(i)] == kModels - k + i) {
				--i;
			}
			if (i < 0) {
				break;
			}
			++comb[static_cast<std::size_t>(i)];
			for (int j = i + 1; j < k; ++j) {
				comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
			}
		}
	}
	return out;
}

} // namespace

std::string EnsembleId::label() const {
	std::string out(1, letter);
	if (index < 10) {
		out += '0';
	}
	return out + std::to_string(index);
}

const std::vector<EnsembleId>& enumerate_ensembles() {
	static const std::vector<EnsembleId> all = build();
	return all;
}

std::optional<EnsembleId> ensemble_from_members(std::vector<int> members) {
	std::sort(members.begin(), members.end());
	for (const auto& e : enumerate_ensembles()) {
		if (e.members == members) {
			return e;
		}
	}
	return std::nullopt;
}

std::optional<EnsembleId> parse_ensemble_label(std::string_view label) {
	if (label.size() < 2) {
		return std::nullopt;
	}
	int index = 0;
	const auto* first = label.data() + 1;
	const auto* last = label.data() + label.size();
	const auto [ptr, ec] = std::from_chars(first, last, index);
	if (ec != std::errc{} || ptr != last) {
		return std::nullopt;
	}
	for (const auto& e : enumerate_ensembles()) {
		if (e.letter == label[0] && e.index == index) {
			return e;
		}
	}
	return std::nullopt;
}

std::string_view name(CombinationMethod method) {
	switch (method) {
	case CombinationMethod::Mean:
		return "mean";
	case CombinationMethod::Median:
		return "median";
	case CombinationMethod::SmapeWeighted:
		return "smape";
	case CombinationMethod::RankWeighted:
		return "rank";
	}
	return "unknown";
}

std::optional<CombinationMethod> parse_method(std::string_view text) {
	for (auto m : kAllMethods) {
		if (name(m) == text) {
			return m;
		}
	}
	return std::nullopt;
}

bool is_weighted(CombinationMethod method) {
	return method == CombinationMethod::SmapeWeighted || method == CombinationMethod::RankWeighted;
}

std::string producer_label(const EnsembleId& id, CombinationMethod method) {
	return id.label() + ":" + std::string(name(method));
}

std::optional<std::pair<EnsembleId, CombinationMethod>> parse_producer_label(std::string_view label) {
	const auto colon = label.find(':');
	if (colon == std::string_view::npos) {
		return std::nullopt;
	}
	auto id = parse_ensemble_label(label.substr(0, colon));
	auto method = parse_method(label.substr(colon + 1));
	if (!id || !method) {
		return std::nullopt;
	}
	return std::make_pair(std::move(*id), *method);
}

std::string member_names(const EnsembleId& id) {
	std::string out;
	for (int m : id.members) {
		if (!out.empty()) {
			out += '+';
		}
		out += models::name(models::kPublicModels[static_cast<std::size_t>(m)]);
	}
	return out;
}

} // namespace pqf::ensemble
