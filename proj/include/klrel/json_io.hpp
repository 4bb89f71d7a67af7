#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "klrel/classify.hpp"
#include "klrel/group.hpp"
#include "klrel/relations.hpp"

namespace klrel {

using Json = nlohmann::json;

// One verification record: {family, type, points, max_rel_residual,
// tolerance, pass}.
Json verification_json(const FamilyVerification& fv);

// Envelope for a sweep: run configuration plus one record per relation and
// an aggregate flag. Contains no timestamp, so equal configurations produce
// byte-identical dumps.
Json verification_sweep_json(const std::vector<FamilyVerification>& reports,
                             const VerifyOptions& opt);

// {family, total, orbits: [{representative: [labels...], size}...]}.
Json orbit_report_json(const FamilyClassification& fc);

// Versioned, entry-exact dump of the group and coset tables: every element
// matrix, the generator and representative indices, both label maps, the
// incidence table, and the label action tables.
Json tables_json(const GroupTables& t);

// Validates a tables_json document against live tables entry by entry;
// throws LabelingMismatch naming the first discrepancy.
void check_tables_json(const Json& j, const GroupTables& t);

// Stable two-space-indented rendering used everywhere a dump is written.
std::string to_stable_string(const Json& j);

} // namespace klrel
