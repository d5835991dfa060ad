#pragma once

#include <string>

#include "allot/axioms.hpp"
#include "allot/manipulation.hpp"
#include "economy_io.hpp"

namespace allot::cli {

/// Six significant digits; display only.
std::string decimal(const Rat& x);
std::string join(std::span<const Rat> xs, std::string_view sep = ", ");

Json amounts_to_json(std::span<const Rat> xs);
Json witness_to_json(const Witness& w);
Json report_to_json(const AxiomReport& r);
Json interval_to_json(const OptionInterval& in);
Json sampled_set_to_json(const SampledOptionSet& set);
Json certificate_to_json(const ManipulationCertificate& cert);

/// Rebuilds the witness from a report document. Agents are 1-based in documents.
Witness witness_from_json(const Json& doc);

}  // namespace allot::cli
