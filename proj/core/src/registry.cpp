#include "allot/registry.hpp"

namespace allot {

RuleFactory::RuleFactory() {
  add_claims_rule(cea_rule());
  add_claims_rule(cel_rule());
  add_claims_rule(pro_rule());
}

void RuleFactory::add_claims_rule(ClaimsRule rule) {
  std::string key = rule.name;
  claims_rules_.insert_or_assign(std::move(key), std::move(rule));
}

const ClaimsRule& RuleFactory::claims_rule(std::string_view name) const {
  const auto it = claims_rules_.find(name);
  if (it == claims_rules_.end()) throw DomainError("unknown claims rule \"" + std::string(name) + "\"");
  return it->second;
}

std::vector<std::string> RuleFactory::claims_rule_names() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : claims_rules_) names.push_back(name);
  return names;
}

Rule RuleFactory::make(std::string_view name, const RuleParams& params) const {
  if (name == "uniform") return uniform_rule();
  if (name == "ced") return ced_rule();
  if (name == "proportional") return proportional_rule();

  const auto colon = name.find(':');
  if (colon == std::string_view::npos) throw DomainError("unknown rule \"" + std::string(name) + "\"");
  const std::string_view family = name.substr(0, colon);
  const std::string_view arg = name.substr(colon + 1);

  if (family == "simple") {
    if (arg == "appendix-b") {
      return sequential_simple_rule(order_by_name(params.order), selector_by_name(params.selector));
    }
    return simple_rule(claims_rule(arg));
  }
  if (family == "realloc") return simple_reallocation_rule(claims_rule(arg));
  if (family == "spl") {
    if (arg == "appendix-b") {
      return plateau_extension(sequential_simple_rule(order_by_name(params.order), selector_by_name(params.selector)));
    }
    return plateau_extension(simple_rule(claims_rule(arg)));
  }
  if (family == "gallery") return gallery_rule(gallery_by_name(arg));
  throw DomainError("unknown rule \"" + std::string(name) + "\"");
}

}  // namespace allot
