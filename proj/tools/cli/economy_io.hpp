#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "allot/economy.hpp"

namespace allot::cli {

using Json = nlohmann::ordered_json;

/// Rationals travel as canonical "p/q" (or integer) strings. JSON integers
/// are accepted on input; floating-point numbers are rejected.
Rat rat_from_json(const Json& value, std::string_view field);
Json rat_to_json(const Rat& x);

Preference preference_from_json(const Json& doc);
Json preference_to_json(const Preference& pref);

/// Throws ParseError on malformed documents and DomainError on documents
/// that do not describe a valid economy.
Economy economy_from_json(const Json& doc);
Json economy_to_json(const Economy& econ);

Economy parse_economy(std::string_view text);
Economy load_economy(const std::filesystem::path& path);

}  // namespace allot::cli
