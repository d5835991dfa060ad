#include "report.hpp"

#include <cstdio>

namespace allot::cli {

std::string decimal(const Rat& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", to_double(x));
  return buf;
}

std::string join(std::span<const Rat> xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += to_string(xs[i]);
  }
  return out;
}

Json amounts_to_json(std::span<const Rat> xs) {
  Json out = Json::array();
  for (const Rat& x : xs) out.push_back(rat_to_json(x));
  return out;
}

Json witness_to_json(const Witness& w) {
  Json out = Json::object();
  out["economy"] = economy_to_json(w.economy);
  Json agents = Json::array();
  for (std::size_t a : w.agents) agents.push_back(a + 1);
  out["agents"] = std::move(agents);
  out["details"] = w.details;
  if (w.variant) out["variant"] = economy_to_json(*w.variant);
  return out;
}

Witness witness_from_json(const Json& doc) {
  Witness w{economy_from_json(doc.at("economy")), {}, doc.value("details", std::string())};
  for (const Json& a : doc.at("agents")) {
    const auto i = a.get<std::size_t>();
    if (i == 0) throw ParseError("agents are numbered from 1");
    w.agents.push_back(i - 1);
  }
  if (doc.contains("variant")) w.variant = economy_from_json(doc.at("variant"));
  return w;
}

Json report_to_json(const AxiomReport& r) {
  Json out = Json::object();
  out["axiom"] = std::string(axiom_name(r.axiom));
  out["rule"] = r.rule;
  out["verdict"] = std::string(verdict_name(r.verdict));
  out["economies_checked"] = r.economies_checked;
  if (r.witness) out["witness"] = witness_to_json(*r.witness);
  return out;
}

Json interval_to_json(const OptionInterval& in) {
  return Json{{"lo", rat_to_json(in.lo)}, {"hi", rat_to_json(in.hi)}, {"exactness", "EXACT"}};
}

Json sampled_set_to_json(const SampledOptionSet& set) {
  Json out = Json::object();
  out["exactness"] = "SAMPLED";
  out["grid"] = set.grid_spec();
  out["profiles"] = set.size();
  out["distinct"] = set.distinct().size();
  out["min"] = rat_to_json(set.min());
  out["max"] = rat_to_json(set.max());
  return out;
}

Json certificate_to_json(const ManipulationCertificate& cert) {
  const Preference& truth = cert.where.truth;
  const ManipulationVerdict& v = cert.verdict;
  Json out = Json::object();
  out["agent"] = cert.where.setting.agent + 1;
  out["omega"] = rat_to_json(cert.where.setting.omega);
  out["n"] = cert.where.setting.n;
  if (cert.where.setting.endowments) out["endowments"] = amounts_to_json(*cert.where.setting.endowments);
  out["truth"] = preference_to_json(truth);
  out["misreport"] = preference_to_json(cert.misreport);
  out["exactness"] = std::string(exactness_name(v.exactness));
  if (cert.truth_interval) out["truth_option_set"] = interval_to_json(*cert.truth_interval);
  if (cert.truth_set) out["truth_option_set"] = sampled_set_to_json(*cert.truth_set);
  if (cert.misreport_interval) out["misreport_option_set"] = interval_to_json(*cert.misreport_interval);
  if (cert.misreport_set) out["misreport_option_set"] = sampled_set_to_json(*cert.misreport_set);
  out["worst_truth"] = rat_to_json(v.worst_truth);
  out["worst_misreport"] = rat_to_json(v.worst_misreport);
  out["disutility_worst_truth"] = rat_to_json(truth.disutility(v.worst_truth));
  out["disutility_worst_misreport"] = rat_to_json(truth.disutility(v.worst_misreport));
  out["strictly_preferred"] = truth.strictly_prefers(v.worst_misreport, v.worst_truth);
  out["by_definition"] = v.by_definition;
  out["by_worst_case"] = v.by_worst_case;
  return out;
}

}  // namespace allot::cli
