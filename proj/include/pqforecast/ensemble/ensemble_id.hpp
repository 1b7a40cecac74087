#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqf::ensemble {

/// A named subset of the eight public models. The letter encodes the size
/// (B = 2 ... H = 8); the index is the 1-based position of the member tuple
/// in lexicographic order among subsets of that size.
struct EnsembleId {
	char letter = 'B';
	int index = 1;
	std::vector<int> members; // canonical model indices, ascending

	int size() const { return static_cast<int>(members.size()); }
	std::string label() const; // e.g. "D28"

	bool operator==(const EnsembleId&) const = default;
};

/// All 247 ensembles: sizes 2..8, lexicographic within each size.
const std::vector<EnsembleId>& enumerate_ensembles();

/// Looks up the ensemble with exactly these members (any order).
std::optional<EnsembleId> ensemble_from_members(std::vector<int> members);
std::optional<EnsembleId> parse_ensemble_label(std::string_view label);

enum class CombinationMethod { Mean, Median, SmapeWeighted, RankWeighted };

inline constexpr CombinationMethod kAllMethods[] = {CombinationMethod::Mean, CombinationMethod::Median,
                                                    CombinationMethod::SmapeWeighted,
                                                    CombinationMethod::RankWeighted};

std::string_view name(CombinationMethod method);
std::optional<CombinationMethod> parse_method(std::string_view text);
bool is_weighted(CombinationMethod method);

/// Producer label used in forecast and leaderboard files, e.g. "D28:median".
std::string producer_label(const EnsembleId& id, CombinationMethod method);
std::optional<std::pair<EnsembleId, CombinationMethod>> parse_producer_label(std::string_view label);

/// Human-readable member list, e.g. "SNaive+SARIMA+STL-ES+STL-ARIMA".
std::string member_names(const EnsembleId& id);

} // namespace pqf::ensemble
