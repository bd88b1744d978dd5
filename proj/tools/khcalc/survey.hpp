#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khovanov/analysis.hpp"
#include "khovanov/knotio.hpp"

namespace khcalc {

struct CrossingRow {
  int knots = 0;
  int thin = 0;
  int thick = 0;
  int jones_non_alternating = 0;
  int ap_special = 0;
};

struct Violation {
  std::string knot;
  std::string flag;
  std::string witness;
};

struct SurveySummary {
  std::map<int, CrossingRow> rows;  // by crossing number of the diagram
  std::vector<std::string> thick;
  std::vector<Violation> violations;
  std::vector<Violation> errors;    // flag = exit category, witness = message
};

struct SurveyOptions {
  int max_crossings = 10;
  int jobs = 1;
  kh::ClassifyOptions classify;
};

struct SurveyResult {
  SurveySummary summary;
  std::vector<kh::ClassificationReport> reports;  // table order, failed knots omitted
};

/// Classifies every record up to the crossing bound. Output does not depend
/// on `jobs`.
SurveyResult run_survey(const std::vector<kh::KnotRecord>& records, const SurveyOptions& opt);

std::string summary_text(const SurveySummary& s);
std::string summary_json(const SurveySummary& s);

}  // namespace khcalc
