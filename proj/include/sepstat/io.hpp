#pragma once

#include <string>

#include <json.hpp>

#include "sepstat/enumerate.hpp"
#include "sepstat/permutation.hpp"
#include "sepstat/separators.hpp"
#include "sepstat/series.hpp"

namespace sepstat {

/// Accepts "53241" (compact, n <= 9), "5 3 2 4 1", "5,3,2,4,1", with optional
/// surrounding brackets. Delimiters select the delimited form.
Permutation parse_permutation(const std::string& text);

nlohmann::ordered_json to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::ordered_json& j);

/// {"perm": [...], "marked_bonds": [i, ...]}
nlohmann::ordered_json to_json(const MarkedWord& mw);
MarkedWord marked_word_from_json(const nlohmann::ordered_json& j);

/// {"perm": [...], "marked_seps": [i, ...]}
nlohmann::ordered_json to_json(const MarkedSepPermutation& msp);
MarkedSepPermutation marked_sep_from_json(const nlohmann::ordered_json& j);

/// [["1",""],["3","down"],...]
nlohmann::ordered_json to_json(const ArrowedComposition& lambda);
ArrowedComposition arrowed_composition_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const SeparatorReport& r);

/// {"order": N, "coeffs": {"n": ["c0", "c1", ...]}}, big integers as decimal strings.
nlohmann::ordered_json to_json(const BiSeries& s);
BiSeries series_from_json(const nlohmann::ordered_json& j);
/// "n,m,count" header and one row per stored coefficient.
std::string to_csv(const BiSeries& s);

/// {"n": n, "kind": "...", "counts": {"m": "count", ...}}
nlohmann::ordered_json to_json(const DistTable& t);
std::string to_csv(const DistTable& t);

}  // namespace sepstat
