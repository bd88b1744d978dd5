#pragma once

#include <string>
#include <utility>
#include <vector>

#include "khovanov/analysis.hpp"

namespace kh {

/// Every flag of a report under its stable JSON key, in a fixed order.
std::vector<std::pair<std::string, const Flag*>> named_flags(const ClassificationReport& r);

/// Grid with one row per i and one column per j; torsion listed below.
std::string ranks_table_text(const BigradedRanks& r);
/// [{"i":..,"j":..,"rank":..[,"torsion":[..]]}, ...]
std::string ranks_json(const BigradedRanks& r, int indent = -1);
std::string summands_json(const std::vector<IntervalSummand>& s, int indent = -1);

/// Schema in docs/report_schema.md.
std::string report_json(const ClassificationReport& r, int indent = 2);
std::string report_text(const ClassificationReport& r);

}  // namespace kh
