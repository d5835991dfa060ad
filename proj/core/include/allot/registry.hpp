#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "allot/rules.hpp"

namespace allot {

/// Parameters that only some rule families read.
struct RuleParams {
  std::string selector = "lo";  ///< sequential adjustment: lo, hi, mid, prop
  std::string order = "index";  ///< sequential adjustment: index, reverse, peak-asc, peak-desc
};

/// Builds rules from namespaced names:
///   uniform, ced, proportional,
///   simple:<claims>, simple:appendix-b, realloc:<claims>, spl:<claims>,
///   gallery:<equal_division|star|bar|hat|underline>.
/// Claims rules cea, cel and pro are built in; more can be added.
class RuleFactory {
 public:
  RuleFactory();

  void add_claims_rule(ClaimsRule rule);
  const ClaimsRule& claims_rule(std::string_view name) const;
  std::vector<std::string> claims_rule_names() const;

  /// Throws DomainError for unknown names.
  Rule make(std::string_view name, const RuleParams& params = {}) const;

 private:
  std::map<std::string, ClaimsRule, std::less<>> claims_rules_;
};

}  // namespace allot
