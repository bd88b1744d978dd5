#include "survey.hpp"

#include <atomic>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "khovanov/errors.hpp"
#include "khovanov/report.hpp"

namespace khcalc {

namespace {

struct Outcome {
  bool skipped = true;
  std::optional<kh::ClassificationReport> report;
  std::string error_kind;
  std::string error;
};

Outcome process(const kh::KnotRecord& rec, const SurveyOptions& opt) {
  Outcome o;
  try {
    const kh::Diagram d = kh::diagram_of(rec);
    if (d.crossing_count() > opt.max_crossings) return o;
    o.skipped = false;
    o.report = kh::classify(rec.name, d, opt.classify, &rec);
  } catch (const kh::SizeLimitError& e) {
    o.skipped = false;
    o.error_kind = "size-limit";
    o.error = e.what();
  } catch (const kh::ConsistencyError& e) {
    o.skipped = false;
    o.error_kind = "consistency";
    o.error = e.what();
  } catch (const std::exception& e) {
    o.skipped = false;
    o.error_kind = "input";
    o.error = e.what();
  }
  return o;
}

}  // namespace

SurveyResult run_survey(const std::vector<kh::KnotRecord>& records, const SurveyOptions& opt) {
  std::vector<Outcome> outcomes(records.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < records.size(); k = next++) outcomes[k] = process(records[k], opt);
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SurveyResult res;
  for (std::size_t k = 0; k < records.size(); ++k) {
    Outcome& o = outcomes[k];
    if (o.skipped) continue;
    if (!o.report) {
      res.summary.errors.push_back({records[k].name, o.error_kind, o.error});
      continue;
    }
    const kh::ClassificationReport& r = *o.report;
    CrossingRow& row = res.summary.rows[r.crossings];
    ++row.knots;
    if (r.thickness == kh::Thickness::Thin) {
      ++row.thin;
    } else {
      ++row.thick;
      res.summary.thick.push_back(r.name);
    }
    if (!r.jones_alternating) ++row.jones_non_alternating;
    if (r.ap_special) ++row.ap_special;
    for (const auto& [key, f] : kh::named_flags(r)) {
      if (f->failed()) res.summary.violations.push_back({r.name, key, f->witness});
    }
    res.reports.push_back(std::move(*o.report));
  }
  return res;
}

std::string summary_text(const SurveySummary& s) {
  std::ostringstream os;
  os << std::setw(9) << "crossings" << std::setw(7) << "knots" << std::setw(7) << "thin" << std::setw(7) << "thick"
     << std::setw(14) << "jones-nonalt" << std::setw(12) << "ap-special" << "\n";
  CrossingRow total;
  const auto line = [&](const std::string& label, const CrossingRow& r) {
    os << std::setw(9) << label << std::setw(7) << r.knots << std::setw(7) << r.thin << std::setw(7) << r.thick
       << std::setw(14) << r.jones_non_alternating << std::setw(12) << r.ap_special << "\n";
  };
  for (const auto& [n, r] : s.rows) {
    line(std::to_string(n), r);
    total.knots += r.knots;
    total.thin += r.thin;
    total.thick += r.thick;
    total.jones_non_alternating += r.jones_non_alternating;
    total.ap_special += r.ap_special;
  }
  line("total", total);
  os << "H-thick:";
  for (const auto& k : s.thick) os << " " << k;
  os << "\nviolations: " << s.violations.size() << "\n";
  for (const auto& v : s.violations) os << "  " << v.knot << " " << v.flag << ": " << v.witness << "\n";
  os << "errors: " << s.errors.size() << "\n";
  for (const auto& e : s.errors) os << "  " << e.knot << " [" << e.flag << "] " << e.witness << "\n";
  return os.str();
}

std::string summary_json(const SurveySummary& s) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (const auto& [n, r] : s.rows) {
    rows.push_back(ordered_json{{"crossings", n},
                                {"knots", r.knots},
                                {"thin", r.thin},
                                {"thick", r.thick},
                                {"jones_non_alternating", r.jones_non_alternating},
                                {"ap_special", r.ap_special}});
  }
  j["rows"] = rows;
  j["thick"] = s.thick;
  const auto list = [](const std::vector<Violation>& v, const char* key) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(ordered_json{{"knot", x.knot}, {key, x.flag}, {"witness", x.witness}});
    return a;
  };
  j["violations"] = list(s.violations, "flag");
  j["errors"] = list(s.errors, "kind");
  return j.dump(2) + "\n";
}

}  // namespace khcalc
