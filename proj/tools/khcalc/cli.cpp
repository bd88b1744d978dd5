#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "khovanov/errors.hpp"
#include "khovanov/invariants.hpp"
#include "khovanov/report.hpp"
#include "survey.hpp"

namespace khcalc {

namespace {

struct InputSpec {
  std::string pd;
  std::string braid;
  std::string name;
  std::string table;
  int limit = 16;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--pd", in.pd, "PD code, e.g. \"X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]\"");
  cmd->add_option("--braid", in.braid, "braid word, e.g. \"1 1 1\" or \"s=3: 1 -2\"");
  cmd->add_option("--name", in.name, "knot name looked up in --table");
  cmd->add_option("--table", in.table, "knot table (JSON lines)");
  cmd->add_option("--limit", in.limit, "crossing limit for cube construction")->capture_default_str();
}

struct Resolved {
  std::string name;
  kh::Diagram diagram;
  std::optional<kh::KnotRecord> record;
};

Resolved resolve_input(const InputSpec& in) {
  const int given = !in.pd.empty() + !in.braid.empty() + !in.name.empty();
  if (given != 1) throw kh::InputError("give exactly one of --pd, --braid, --name");
  if (!in.pd.empty()) return {"pd", kh::Diagram::from_pd(kh::parse_pd(in.pd)), std::nullopt};
  if (!in.braid.empty()) {
    kh::KnotRecord rec;
    rec.name = "braid";
    rec.braid = kh::parse_braid(in.braid);
    kh::Diagram d = kh::Diagram::from_braid_closure(*rec.braid);
    return {rec.name, std::move(d), std::move(rec)};
  }
  if (in.table.empty()) throw kh::InputError("--name needs --table");
  for (auto& rec : kh::load_knot_table(in.table)) {
    if (rec.name == in.name) {
      kh::Diagram d = kh::diagram_of(rec);
      return {rec.name, std::move(d), std::move(rec)};
    }
  }
  throw kh::InputError("no knot named " + in.name + " in " + in.table);
}

struct ComputeArgs {
  InputSpec in;
  std::string ring = "Q";
  bool reduced = false;
  bool module = false;
  bool json = false;
  bool dump = false;
};

std::string elem_text(const kh::AElement<kh::Rational>& v) {
  std::string s;
  if (sgn(v.constant) != 0) s = v.constant.get_str();
  if (sgn(v.linear) != 0) {
    const bool neg = sgn(v.linear) < 0;
    const kh::Rational mag = abs(v.linear);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    s += (mag == 1 ? std::string() : mag.get_str()) + "X";
  }
  return s;
}

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const Resolved r = resolve_input(a.in);
  const kh::CoefficientRing ring = kh::CoefficientRing::parse(a.ring);
  const kh::BuildOptions build{a.in.limit};

  const kh::BigradedComplex cube =
      a.reduced ? kh::build_reduced(r.diagram, 0, ring, build) : kh::build_cube(r.diagram, ring, build);
  cube.verify_d_squared();
  const kh::BigradedRanks ranks = kh::homology_ranks(cube);
  if (!a.reduced && ring.kind() == kh::CoefficientRing::Kind::Rationals) {
    if (kh::jones_from_homology(ranks) != kh::bracket_jones(r.diagram)) {
      throw kh::ConsistencyError("Euler characteristic differs from the bracket polynomial");
    }
  }

  std::optional<kh::MinimalComplex> minimal;
  std::vector<kh::IntervalSummand> summands;
  if (a.module) {
    if (ring.kind() == kh::CoefficientRing::Kind::PrimeField) {
      throw kh::InputError("--module works over Q or Z");
    }
    const kh::ModuleComplex mc = kh::build_module_complex(r.diagram, 0, build);
    mc.verify_d_squared();
    minimal = kh::minimize_module_complex(mc, ring);
    if (ring.kind() == kh::CoefficientRing::Kind::Rationals) summands = kh::interval_decomposition(*minimal);
  }

  if (a.dump) out << kh::dump_complex(cube);
  if (a.json) {
    out << "{\"name\": \"" << r.name << "\", \"ring\": \"" << ring.name() << "\", \"reduced\": "
        << (a.reduced ? "true" : "false") << ", \"ranks\": " << kh::ranks_json(ranks);
    if (a.module && ring.kind() == kh::CoefficientRing::Kind::Rationals) {
      out << ", \"summands\": " << kh::summands_json(summands) << ", \"summand_counts\": \""
          << kh::summand_counts(summands) << "\"";
    }
    out << "}\n";
    return kOk;
  }
  out << (a.reduced ? "reduced " : "") << "cohomology of " << r.name << " over " << ring.name() << "\n";
  out << kh::ranks_table_text(ranks);
  if (minimal) {
    out << "minimal free ranks:";
    for (int k : minimal->free_ranks()) out << " " << k;
    out << "  (from degree " << minimal->min_degree << ")\n";
    if (ring.kind() == kh::CoefficientRing::Kind::Rationals) {
      out << "summands: " << kh::summand_counts(summands) << "\n";
      for (const auto& s : summands) out << "  C" << s.length << "[" << s.degree << "]{" << s.jshift << "}\n";
    } else {
      for (std::size_t k = 0; k < minimal->differential.size(); ++k) {
        for (const auto& e : minimal->differential[k]) {
          out << "  d: degree " << minimal->min_degree + static_cast<int>(k) << " g" << e.src << " -> g" << e.tgt
              << " : " << elem_text(e.value) << "\n";
        }
      }
    }
  }
  return kOk;
}

struct ClassifyArgs {
  InputSpec in;
  bool json = false;
  bool integral = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const Resolved r = resolve_input(a.in);
  kh::ClassifyOptions opt;
  opt.crossing_limit = a.in.limit;
  opt.with_integral = a.integral;
  const kh::ClassificationReport rep =
      kh::classify(r.name, r.diagram, opt, r.record ? &*r.record : nullptr);
  out << (a.json ? kh::report_json(rep) : kh::report_text(rep));
  return kOk;
}

struct SurveyArgs {
  std::string table;
  int max_crossings = 10;
  int jobs = 1;
  std::string out_dir;
  bool json = false;
  int limit = 16;
};

int cmd_survey(const SurveyArgs& a, std::ostream& out) {
  const auto records = kh::load_knot_table(a.table);
  SurveyOptions opt;
  opt.max_crossings = a.max_crossings;
  opt.jobs = a.jobs;
  opt.classify.crossing_limit = a.limit;
  const SurveyResult res = run_survey(records, opt);
  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    for (const auto& rep : res.reports) {
      std::ofstream f(std::filesystem::path(a.out_dir) / (rep.name + ".json"));
      f << kh::report_json(rep);
      if (!f) throw std::runtime_error("cannot write report for " + rep.name);
    }
    std::ofstream f(std::filesystem::path(a.out_dir) / "summary.json");
    f << summary_json(res.summary);
    if (!f) throw std::runtime_error("cannot write summary.json");
  }
  out << (a.json ? summary_json(res.summary) : summary_text(res.summary));
  return kOk;
}

struct PlotArgs {
  std::string table;
  std::string y = "det";
  std::string out_file;
  double log_base = 0;  // 0: natural log
  int limit = 16;
};

int cmd_plotdata(const PlotArgs& a, std::ostream& out, std::ostream& err) {
  if (a.y != "det" && a.y != "rank") throw kh::InputError("--y must be det or rank");
  if (a.log_base != 0 && (a.log_base <= 0 || a.log_base == 1)) throw kh::InputError("bad --log-base");
  const auto records = kh::load_knot_table(a.table);
  struct Point {
    double x, y;
    std::string name;
  };
  std::vector<Point> pts;
  for (const auto& rec : records) {
    if (!rec.volume) {
      err << "skip " << rec.name << ": no volume\n";
      continue;
    }
    const kh::Diagram d = kh::diagram_of(rec);
    double value;
    if (a.y == "det") {
      const auto det = std::llabs(kh::determinant(d));
      if (det == 0) {
        err << "skip " << rec.name << ": determinant is 0\n";
        continue;
      }
      value = static_cast<double>(det);
    } else {
      const long rank = kh::homology_ranks(kh::build_cube(d, kh::CoefficientRing::rationals(), {a.limit})).total_rank();
      if (rank <= 1) {
        err << "skip " << rec.name << ": rank H <= 1\n";
        continue;
      }
      value = static_cast<double>(rank - 1);
    }
    double y = std::log(value);
    if (a.log_base != 0) y /= std::log(a.log_base);
    pts.push_back({*rec.volume, y, rec.name});
  }
  std::stable_sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
    return p.x != q.x ? p.x < q.x : p.name < q.name;
  });
  std::string text;
  char buf[64];
  for (const auto& p : pts) {
    std::snprintf(buf, sizeof buf, "%.6f %.6f\n", p.x, p.y);
    text += buf;
  }
  if (a.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(a.out_file);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + a.out_file);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Khovanov cohomology and knot pattern checks", "khcalc"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "bigraded cohomology ranks of one diagram");
  add_input_options(c, compute.in);
  c->add_option("--ring", compute.ring, "Q, Z, Z2, Z3, ...")->capture_default_str();
  c->add_flag("--reduced", compute.reduced, "reduced complex");
  c->add_flag("--module", compute.module, "minimal A-module complex and its summands");
  c->add_flag("--json", compute.json, "JSON output");
  c->add_flag("--dump", compute.dump, "print the complex before the ranks");

  ClassifyArgs classify;
  auto* k = app.add_subcommand("classify", "full pattern report for one knot");
  add_input_options(k, classify.in);
  k->add_flag("--json", classify.json, "JSON output");
  k->add_flag("--integral", classify.integral, "also compute integral cohomology");

  SurveyArgs survey;
  auto* s = app.add_subcommand("survey", "classify every knot of a table");
  s->add_option("--table", survey.table, "knot table (JSON lines)")->required();
  s->add_option("--max-crossings", survey.max_crossings)->capture_default_str();
  s->add_option("--jobs", survey.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  s->add_option("--out", survey.out_dir, "directory for per-knot reports and summary.json");
  s->add_option("--limit", survey.limit, "crossing limit")->capture_default_str();
  s->add_flag("--json", survey.json, "print the summary as JSON");

  PlotArgs plot;
  auto* p = app.add_subcommand("plotdata", "volume vs. log data for plotting");
  p->add_option("--table", plot.table, "knot table with volumes")->required();
  p->add_option("--y", plot.y, "det or rank")->capture_default_str();
  p->add_option("--out", plot.out_file, "output .dat file (default stdout)");
  p->add_option("--log-base", plot.log_base, "logarithm base (default e)");
  p->add_option("--limit", plot.limit, "crossing limit")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (k->parsed()) return cmd_classify(classify, out);
    if (s->parsed()) return cmd_survey(survey, out);
    if (p->parsed()) return cmd_plotdata(plot, out, err);
  } catch (const kh::SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const kh::ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace khcalc
