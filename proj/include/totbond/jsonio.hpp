#ifndef TOTBOND_JSONIO_HPP
#define TOTBOND_JSONIO_HPP

#include <string>

#include <json.hpp>

#include "totbond/bondage.hpp"
#include "totbond/domination.hpp"
#include "totbond/sweep.hpp"

namespace totbond {

nlohmann::json to_json(const DominationCertificate& cert);

// {k, deleted:[[u,v],...], gamma_before, witness_before, gamma_after,
//  witness_after} with sorted arrays.
nlohmann::json to_json(const BondageCertificate& cert);
BondageCertificate bondage_certificate_from_json(const nlohmann::json& j);

// Certificate object, or {k, not_achievable:true, max_increase} on failure.
nlohmann::json outcome_to_json(int k, const BondageOutcome& outcome);

// Full report: {"certified": {...}, "timing": {...}}. Wall times live only
// under "timing" so the certified payload is byte-stable across runs.
nlohmann::json report_to_json(const SweepReport& report);
SweepReport report_from_json(const nlohmann::json& j);

// Canonical serialization of the certified subtree.
std::string certified_payload(const SweepReport& report);

nlohmann::json class_spec_to_json(const ClassSpec& spec);
ClassSpec class_spec_from_json(const nlohmann::json& j);

} // namespace totbond

#endif
