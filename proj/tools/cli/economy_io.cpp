#include "economy_io.hpp"

#include <fstream>
#include <sstream>

namespace allot::cli {
namespace {

const Json& field(const Json& doc, std::string_view name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError("missing field '" + std::string(name) + "'");
  return *it;
}

Rat rat_field(const Json& doc, std::string_view name, const Rat& fallback) {
  return doc.contains(name) ? rat_from_json(doc.at(std::string(name)), name) : fallback;
}

}  // namespace

Rat rat_from_json(const Json& value, std::string_view name) {
  if (value.is_string()) {
    try {
      return parse_rat(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("field '" + std::string(name) + "': " + e.what());
    }
  }
  if (value.is_number_integer()) return value.is_number_unsigned() ? Rat(value.get<unsigned long>()) : Rat(value.get<long>());
  if (value.is_number_float()) {
    throw ParseError("field '" + std::string(name) + "': decimals are not accepted, write \"p/q\"");
  }
  throw ParseError("field '" + std::string(name) + "' must be a rational string");
}

Json rat_to_json(const Rat& x) { return to_string(x); }

Preference preference_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("agent entries must be objects");
  if (doc.value("unbounded", false)) return Preference::unbounded();
  const Rat left = rat_field(doc, "left_slope", Rat(1));
  const Rat right = rat_field(doc, "right_slope", Rat(1));
  const bool has_peak = doc.contains("peak");
  const bool has_plateau = doc.contains("plateau_lo") || doc.contains("plateau_hi");
  if (has_peak == has_plateau) throw ParseError("agent needs either 'peak' or 'plateau_lo'/'plateau_hi'");
  if (has_peak) return Preference::single_peaked(rat_from_json(doc.at("peak"), "peak"), left, right);
  return Preference::single_plateaued(rat_from_json(field(doc, "plateau_lo"), "plateau_lo"),
                                      rat_from_json(field(doc, "plateau_hi"), "plateau_hi"), left, right);
}

Json preference_to_json(const Preference& pref) {
  Json out = Json::object();
  if (pref.is_unbounded()) {
    out["unbounded"] = true;
    return out;
  }
  if (pref.is_single_peaked()) {
    out["peak"] = rat_to_json(pref.peak());
  } else {
    out["plateau_lo"] = rat_to_json(pref.plateau_lo());
    out["plateau_hi"] = rat_to_json(pref.plateau_hi());
  }
  out["left_slope"] = rat_to_json(pref.left_slope());
  out["right_slope"] = rat_to_json(pref.right_slope());
  return out;
}

Economy economy_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("economy document must be an object");
  const Rat omega = rat_from_json(field(doc, "omega"), "omega");
  const Json& agents = field(doc, "agents");
  if (!agents.is_array()) throw ParseError("'agents' must be a list");
  std::vector<Preference> prefs;
  for (const Json& a : agents) prefs.push_back(preference_from_json(a));
  std::optional<std::vector<Rat>> endowments;
  if (doc.contains("endowments")) {
    const Json& w = doc.at("endowments");
    if (!w.is_array()) throw ParseError("'endowments' must be a list");
    endowments.emplace();
    for (const Json& x : w) endowments->push_back(rat_from_json(x, "endowments"));
  }
  return Economy(std::move(prefs), omega, std::move(endowments));
}

Json economy_to_json(const Economy& econ) {
  Json out = Json::object();
  out["omega"] = rat_to_json(econ.omega());
  Json agents = Json::array();
  for (const Preference& p : econ.prefs()) agents.push_back(preference_to_json(p));
  out["agents"] = std::move(agents);
  if (econ.has_endowments()) {
    Json w = Json::array();
    for (const Rat& x : econ.endowments()) w.push_back(rat_to_json(x));
    out["endowments"] = std::move(w);
  }
  return out;
}

Economy parse_economy(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return economy_from_json(doc);
}

Economy load_economy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read economy file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_economy(buf.str());
}

}  // namespace allot::cli
