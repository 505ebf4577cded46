#pragma once

#include "demchar/charring.hpp"
#include "demchar/kernel.hpp"
#include "demchar/theorem.hpp"
#include "demchar/weyl.hpp"

#include <json.hpp>

#include <filesystem>

namespace demchar {

using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight &w);
Weight weight_from_json(const Json &j);

/// {"rank": r, "terms": [{"weight": [..], "coeff": "<decimal>"}, ...]}, terms
/// in lexicographic weight order.
Json char_to_json(const CharElement &v);
CharElement char_from_json(const Json &j);

/// {"tau": "<word>", "lambda": [..], "passed": bool, "dim_lhs": "..",
///  "dim_rhs": "..", "difference_terms": [..], ...}
Json report_to_json(const VerificationReport &r);

/// {"coefficients": [{"mu": [..], "lambda": [..], "coeff": ".."}, ...]}
Json decomposition_to_json(const WeylGroup &g, const Decomposition &dec);

inline constexpr int kGroupCacheVersion = 1;

Json group_to_json(const WeylGroup &g);
/// Throws InputError when the stored data does not describe d's group.
WeylGroup group_from_json(const RootDatum &d, const Json &j);

std::filesystem::path group_cache_path(const std::filesystem::path &dir, const RootDatum &d);

/// Loads the group for d from `dir` when a valid file for the current format
/// version exists; otherwise generates it and writes the file. An empty
/// `dir` disables caching.
WeylGroup load_or_generate(const RootDatum &d, const GroupOptions &options, const std::filesystem::path &dir);

} // namespace demchar
