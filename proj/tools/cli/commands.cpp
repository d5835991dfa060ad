#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "allot/registry.hpp"
#include "report.hpp"

namespace allot::cli {
namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::string grid_step = "1/60";
  std::size_t samples = 1000;
  std::string format = "table";
};

struct RuleArgs {
  std::string name;
  RuleParams params;

  void attach(CLI::App& app) {
    app.add_option("-r,--rule", name, "rule name, e.g. uniform, simple:cea, gallery:hat")->required();
    app.add_option("--selector", params.selector, "appendix-b selector: lo, hi, mid, prop");
    app.add_option("--order", params.order, "appendix-b order: index, reverse, peak-asc, peak-desc");
  }
  Rule build() const { return RuleFactory().make(name, params); }
};

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Rat grid_step(const Globals& g) {
  const Rat step = parse_rat(g.grid_step);
  if (step <= 0 || step > 1) throw DomainError("--grid-step must lie in (0, 1]");
  return step;
}

bool machine(const Globals& g) { return g.format == "machine"; }

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

AgentSetting setting_for(const Economy& econ, std::size_t agent) {
  AgentSetting s;
  s.agent = agent;
  s.omega = econ.omega();
  s.n = econ.size();
  if (econ.has_endowments()) {
    const auto w = econ.endowments();
    s.endowments = std::vector<Rat>(w.begin(), w.end());
  }
  return s;
}

std::size_t agent_index(std::size_t one_based, const Economy& econ) {
  if (one_based == 0 || one_based > econ.size()) {
    throw DomainError("agent " + std::to_string(one_based) + " out of range 1.." + std::to_string(econ.size()));
  }
  return one_based - 1;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// ---------------------------------------------------------------------------

int cmd_allocate(const Globals& g, const std::string& file, const RuleArgs& ra, std::ostream& out) {
  const Economy econ = load_economy(file);
  const Rule rule = ra.build();
  const Allotment x = rule(econ);
  if (machine(g)) {
    Json doc{{"command", "allocate"}, {"rule", rule.name()}, {"economy", economy_to_json(econ)}};
    doc["allotment"] = amounts_to_json(x.amounts());
    Json approx = Json::array();
    for (const Rat& a : x.amounts()) approx.push_back(to_double(a));
    doc["approx"] = std::move(approx);
    emit(out, doc);
    return kPass;
  }
  out << "rule: " << rule.name() << "  omega: " << to_string(econ.omega()) << '\n';
  out << pad("agent", 7) << pad("preference", 34) << pad("amount", 14) << "approx\n";
  for (std::size_t i = 0; i < econ.size(); ++i) {
    out << pad(std::to_string(i + 1), 7) << pad(describe(econ.pref(i)), 34) << pad(to_string(x[i]), 14)
        << decimal(x[i]) << '\n';
  }
  out << "allotment: " << join(x.amounts()) << '\n';
  return kPass;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::vector<std::uint64_t> random;
  std::string axioms;
  std::string expect_fail;
  std::size_t nom_cases = 100;
};

int cmd_check(const Globals& g, const CheckArgs& ca, const RuleArgs& ra, std::ostream& out) {
  std::vector<Axiom> axioms;
  for (const std::string& name : split(ca.axioms)) axioms.push_back(axiom_by_name(name));
  if (axioms.empty()) throw DomainError("--axioms is empty");
  std::vector<Axiom> expected_fail;
  for (const std::string& name : split(ca.expect_fail)) expected_fail.push_back(axiom_by_name(name));
  if (!ca.file.empty() && !ca.random.empty()) throw DomainError("give an economy file or --random, not both");

  const Rule rule = ra.build();
  const Rat step = grid_step(g);
  const bool endowed = rule.domain() == RuleDomain::kWithEndowments;

  std::vector<Economy> econs;
  std::vector<NomCase> sweep;
  std::string source;
  if (!ca.file.empty()) {
    econs.push_back(load_economy(ca.file));
    for (NomCase& c : sweep_of(econs.front())) {
      if (c.truth.is_single_peaked()) sweep.push_back(std::move(c));
    }
    source = ca.file;
  } else {
    const std::uint64_t seed = ca.random.empty() ? g.seed : ca.random[0];
    const std::size_t count = ca.random.empty() ? g.samples : static_cast<std::size_t>(ca.random[1]);
    SamplingOptions opts;
    opts.with_endowments = endowed;
    opts.plateaus = rule.domain() == RuleDomain::kSinglePlateaued;
    econs = standard_suite(seed, count, opts);
    const std::vector<std::size_t> ns{2, 3};
    sweep = standard_sweep(seed, ca.nom_cases, ns, endowed);
    source = "random seed " + std::to_string(seed) + ", " + std::to_string(econs.size()) + " economies";
  }

  SearchOptions search;
  search.misreports.step = step;
  search.opponents.step = step;
  search.opponents.seed = g.seed;

  std::vector<AxiomReport> reports;
  std::vector<std::optional<Json>> certificates;
  for (Axiom a : axioms) {
    std::optional<Json> cert;
    if (a == Axiom::kNom) {
      NomReport nom = check_nom(rule, sweep, search);
      if (nom.certificate) cert = certificate_to_json(*nom.certificate);
      reports.push_back(std::move(nom.report));
    } else if (a == Axiom::kStrategyProof) {
      reports.push_back(check_strategy_proofness(rule, econs, search.misreports));
    } else {
      reports.push_back(check_axiom(a, rule, econs));
    }
    certificates.push_back(std::move(cert));
  }

  bool ok = true;
  std::vector<bool> as_expected;
  for (const AxiomReport& r : reports) {
    const bool expect = std::find(expected_fail.begin(), expected_fail.end(), r.axiom) != expected_fail.end();
    as_expected.push_back(r.passed() != expect);
    ok = ok && as_expected.back();
  }

  if (machine(g)) {
    Json doc{{"command", "check"}, {"rule", rule.name()}, {"source", source}};
    Json rows = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      Json row = report_to_json(reports[i]);
      row["as_expected"] = static_cast<bool>(as_expected[i]);
      if (certificates[i]) row["certificate"] = *certificates[i];
      rows.push_back(std::move(row));
    }
    doc["reports"] = std::move(rows);
    doc["ok"] = ok;
    emit(out, doc);
    return ok ? kPass : kFail;
  }
  out << "rule: " << rule.name() << "  sample: " << source << '\n';
  out << pad("axiom", 22) << pad("verdict", 16) << pad("checked", 9) << "expected\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const AxiomReport& r = reports[i];
    out << pad(std::string(axiom_name(r.axiom)), 22) << pad(std::string(verdict_name(r.verdict)), 16)
        << pad(std::to_string(r.economies_checked), 9) << (as_expected[i] ? "yes" : "NO") << '\n';
  }
  for (const AxiomReport& r : reports) {
    if (!r.witness) continue;
    out << "\n" << axiom_name(r.axiom) << " witness: " << r.witness->details << '\n';
    out << "  economy: " << economy_to_json(r.witness->economy).dump() << '\n';
    if (r.witness->variant) out << "  variant: " << economy_to_json(*r.witness->variant).dump() << '\n';
  }
  return ok ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct AgentArgs {
  std::string file;
  std::size_t agent = 1;
  bool witnesses = false;
};

std::string peaks_of(const OpponentProfile& profile) {
  std::string s;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) s += ", ";
    s += describe(profile[i]);
  }
  return "[" + s + "]";
}

int cmd_option_set(const Globals& g, const AgentArgs& aa, const RuleArgs& ra, std::ostream& out) {
  const Economy econ = load_economy(aa.file);
  const std::size_t agent = agent_index(aa.agent, econ);
  const Rule rule = ra.build();
  const AgentSetting setting = setting_for(econ, agent);
  const Preference& own = econ.pref(agent);
  OpponentGrid grid;
  grid.step = grid_step(g);
  grid.seed = g.seed;
  const SampledOptionSet sampled = option_set_sampled(rule, setting, own, grid);

  std::optional<OptionInterval> exact;
  if (rule.family() != SimpleFamily::kNone && own.is_single_peaked()) {
    exact = simple_option_set(own.peak(), setting);
  }
  const bool contained =
      !exact || std::all_of(sampled.outcomes().begin(), sampled.outcomes().end(),
                            [&](const Rat& x) { return exact->contains(x); });
  const bool endpoints = !exact || (sampled.contains(exact->lo) && sampled.contains(exact->hi));

  if (machine(g)) {
    Json doc{{"command", "option-set"}, {"rule", rule.name()}, {"agent", aa.agent}, {"economy", economy_to_json(econ)}};
    if (exact) {
      doc["option_set"] = interval_to_json(*exact);
      doc["sampled_contained"] = contained;
      doc["endpoints_attained"] = endpoints;
    }
    doc["sampled"] = sampled_set_to_json(sampled);
    if (aa.witnesses) {
      Json w = Json::object();
      w["min"] = economy_to_json(sampled.witness_economy(sampled.min()));
      w["max"] = economy_to_json(sampled.witness_economy(sampled.max()));
      doc["witnesses"] = std::move(w);
    }
    emit(out, doc);
    return contained && endpoints ? kPass : kFail;
  }
  out << "rule: " << rule.name() << "  agent " << aa.agent << ": " << describe(own) << "  omega: "
      << to_string(setting.omega) << "  n: " << setting.n << '\n';
  if (exact) {
    out << "[" << to_string(exact->lo) << ", " << to_string(exact->hi) << "] (exact)\n";
    out << "sampled confirmation: " << sampled.size() << " profiles, " << sampled.distinct().size()
        << " distinct outcomes, contained " << (contained ? "yes" : "NO") << ", endpoints attained "
        << (endpoints ? "yes" : "NO") << '\n';
  } else {
    out << "sampled range [" << to_string(sampled.min()) << ", " << to_string(sampled.max()) << "] over "
        << sampled.size() << " profiles, " << sampled.distinct().size() << " distinct outcomes\n";
  }
  out << "grid: " << sampled.grid_spec() << '\n';
  if (aa.witnesses) {
    out << "min " << to_string(sampled.min()) << " attained with opponents " << peaks_of(sampled.witness(sampled.min()))
        << '\n';
    out << "max " << to_string(sampled.max()) << " attained with opponents " << peaks_of(sampled.witness(sampled.max()))
        << '\n';
  }
  return contained && endpoints ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct ManipulationArgs {
  AgentArgs agent;
  std::string misreport_grid;
  bool all_slopes = false;
  bool expect_fail = false;
};

std::string set_summary(const ManipulationCertificate& cert, bool truth) {
  const auto& interval = truth ? cert.truth_interval : cert.misreport_interval;
  const auto& set = truth ? cert.truth_set : cert.misreport_set;
  if (interval) return "[" + to_string(interval->lo) + ", " + to_string(interval->hi) + "] (exact)";
  return "sampled {" + std::to_string(set->distinct().size()) + " outcomes in [" + to_string(set->min()) + ", " +
         to_string(set->max()) + "]}";
}

int cmd_find_manipulation(const Globals& g, const ManipulationArgs& ma, const RuleArgs& ra, std::ostream& out) {
  const Economy econ = load_economy(ma.agent.file);
  const std::size_t agent = agent_index(ma.agent.agent, econ);
  const Rule rule = ra.build();
  const Preference& truth = econ.pref(agent);
  if (!truth.is_single_peaked()) throw DomainError("find-manipulation needs a single-peaked agent");

  SearchOptions search;
  search.opponents.step = grid_step(g);
  search.opponents.seed = g.seed;
  search.misreports.step = ma.misreport_grid.empty() ? search.opponents.step : parse_rat(ma.misreport_grid);
  if (search.misreports.step <= 0) throw DomainError("--misreport-grid must be positive");
  search.misreports.all_slopes = ma.all_slopes;
  const auto cert = find_obvious_manipulation(rule, NomCase{truth, setting_for(econ, agent)}, search);
  const int code = (cert.has_value() != ma.expect_fail) ? kFail : kPass;

  if (machine(g)) {
    Json doc{{"command", "find-manipulation"}, {"rule", rule.name()}, {"agent", ma.agent.agent}};
    doc["economy"] = economy_to_json(econ);
    doc["misreport_grid"] = to_string(search.misreports.step);
    doc["certificate"] = cert ? certificate_to_json(*cert) : Json(nullptr);
    emit(out, doc);
    return code;
  }
  out << "rule: " << rule.name() << "  agent " << ma.agent.agent << ": " << describe(truth) << '\n';
  if (!cert) {
    out << "no obvious manipulation found on grid (step " << to_string(search.misreports.step) << "*omega)\n";
    return code;
  }
  const ManipulationVerdict& v = cert->verdict;
  const Rat dt = truth.disutility(v.worst_truth);
  const Rat dm = truth.disutility(v.worst_misreport);
  out << "obvious manipulation: report " << describe(cert->misreport) << " (" << exactness_name(v.exactness) << ")\n";
  out << "  truthful option set:  " << set_summary(*cert, true) << '\n';
  out << "  misreport option set: " << set_summary(*cert, false) << '\n';
  out << "  worst truthful outcome " << to_string(v.worst_truth) << " with disutility " << to_string(dt) << '\n';
  out << "  worst misreport outcome " << to_string(v.worst_misreport) << " with disutility " << to_string(dm) << '\n';
  out << "  strict preference: " << to_string(dm) << " < " << to_string(dt) << " is "
      << (dm < dt ? "true" : "false") << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact allotment rules, axiom checks and manipulation search", "allot"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for every random choice");
  app.add_option("--grid-step", g.grid_step, "grid spacing as a fraction of omega, as p/q");
  app.add_option("--samples", g.samples, "random economies for check");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "machine"}));

  RuleArgs alloc_rule, check_rule, option_rule, manip_rule;
  std::string alloc_file;
  CLI::App* allocate = app.add_subcommand("allocate", "allocate an economy with a rule");
  allocate->add_option("economy", alloc_file, "economy file (JSON)")->required();
  alloc_rule.attach(*allocate);

  CheckArgs ca;
  CLI::App* check = app.add_subcommand("check", "check axioms on a file or a seeded random sample");
  check->add_option("economy", ca.file, "economy file (JSON)");
  check->add_option("--random", ca.random, "SEED COUNT")->expected(2);
  check->add_option("-a,--axioms", ca.axioms, "comma-separated axiom names")->required();
  check->add_option("--expect-fail", ca.expect_fail, "axioms expected to FAIL");
  check->add_option("--nom-cases", ca.nom_cases, "random NOM cases");
  check_rule.attach(*check);

  AgentArgs oa;
  CLI::App* option = app.add_subcommand("option-set", "option set of one agent");
  option->add_option("economy", oa.file, "economy file (JSON)")->required();
  option->add_option("--agent", oa.agent, "agent, numbered from 1")->required();
  option->add_flag("--witnesses", oa.witnesses, "show the opponent profiles attaining min and max");
  option_rule.attach(*option);

  ManipulationArgs ma;
  CLI::App* manip = app.add_subcommand("find-manipulation", "search for an obvious manipulation");
  manip->add_option("economy", ma.agent.file, "economy file (JSON)")->required();
  manip->add_option("--agent", ma.agent.agent, "agent, numbered from 1")->required();
  manip->add_option("--misreport-grid", ma.misreport_grid, "misreport peak spacing as a fraction of omega");
  manip->add_flag("--all-slopes", ma.all_slopes, "also vary misreported slopes");
  manip->add_flag("--expect-fail", ma.expect_fail, "exit 0 only if a manipulation is found");
  manip_rule.attach(*manip);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*allocate) return cmd_allocate(g, alloc_file, alloc_rule, out);
    if (*check) return cmd_check(g, ca, check_rule, out);
    if (*option) return cmd_option_set(g, oa, option_rule, out);
    return cmd_find_manipulation(g, ma, manip_rule, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace allot::cli
