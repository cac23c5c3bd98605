#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <fppshield/cover_lattice.hpp>
#include <fppshield/oracles.hpp>
#include <fppshield/shield.hpp>

namespace fppshield {

// JSON field names are part of the external interface; keep them stable.
nlohmann::json to_json(const ShieldReport &report);
nlohmann::json to_json(const CoverEnumeration &covers);
nlohmann::json to_json(const EndomorphismSearchResult &result);
nlohmann::json to_json(const VerificationRun &run);

/// Rebuilds the poset embedded in an analysis report ("n" and "edges").
Poset poset_from_report(const nlohmann::json &report);

std::string to_text(const ShieldReport &report);
std::string to_text(const CoverEnumeration &covers);
std::string to_text(const EndomorphismSearchResult &result);
std::string to_text(const VerificationRun &run);

/// Rows "(a,b) | z" of the interval witnesses, one per connected-removal
/// cover edge; failing pairs show "-".
std::string lemma3_table(const Lemma3Result &result);

} // namespace fppshield
