#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "lca/generators.hpp"
#include "lca/harness.hpp"
#include "lca/orient.hpp"

namespace lca {

inline constexpr std::string_view kReportSchema = "lcaorient.report/1";

std::string_view version_string();

// Wall times are left out; callers collect them under a separate "timing"
// object so that identical runs serialize identically.
nlohmann::json to_json(const OrientParams& p);
nlohmann::json to_json(const ProbeSummary& s);
nlohmann::json to_json(const RunReport& r);
nlohmann::json to_json(const ComponentCensus& c);
nlohmann::json to_json(const AttackReport& a);
nlohmann::json to_json(const AdversarialLayout& layout);

/// One CSV row per element of report["trials"]; nested objects flatten to
/// dotted column names, scalar arrays join with ';'. Columns are the sorted
/// union of keys.
void write_csv(std::ostream& out, const nlohmann::json& report);

}  // namespace lca
