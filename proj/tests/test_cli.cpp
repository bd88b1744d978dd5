#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = khcalc::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A few census lines copied into a scratch table.
fs::path scratch_table(const std::string& tag, const std::vector<std::string>& names) {
  const fs::path dir = fs::temp_directory_path() / ("khcalc_test_" + tag);
  fs::create_directories(dir);
  const fs::path file = dir / "table.jsonl";
  std::ifstream in(fixtures::data_path("census10.jsonl"));
  std::ofstream out(file);
  std::string line;
  while (std::getline(in, line)) {
    for (const auto& n : names) {
      if (line.find("\"name\":\"" + n + "\"") != std::string::npos) out << line << "\n";
    }
  }
  return file;
}

}  // namespace

TEST(Cli, ComputeTrefoil) {
  const auto r = invoke({"compute", "--braid", "1 1 1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("-9"), std::string::npos);
  const auto m = invoke({"compute", "--braid", "1 1 1", "--module"});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("summands: C0 x1, C1 x1"), std::string::npos) << m.out;
  const auto z = invoke({"compute", "--pd", "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]", "--ring", "Z"});
  EXPECT_EQ(z.code, 0);
  EXPECT_NE(z.out.find("Z2"), std::string::npos) << z.out;
}

TEST(Cli, ComputeJsonAndDump) {
  const auto r = invoke({"compute", "--braid", "1 1 1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.front(), '{');
  const auto d = invoke({"compute", "--braid", "1 1", "--dump"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("complex ring Q"), std::string::npos);
}

TEST(Cli, ComputeByName) {
  const auto r = invoke({"compute", "--table", fixtures::data_path("census10.jsonl"), "--name", "4_1", "--reduced"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto missing = invoke({"compute", "--table", fixtures::data_path("census10.jsonl"), "--name", "12a_1"});
  EXPECT_EQ(missing.code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"compute", "--pd", "X[1,4,2,3];X[3,6,4,5]"}).code, 2);
  EXPECT_EQ(invoke({"compute", "--braid", "1 0"}).code, 2);
  EXPECT_EQ(invoke({"compute"}).code, 2);
  EXPECT_EQ(invoke({"compute", "--braid", "1 1 1", "--ring", "Z6"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"survey"}).code, 2);
  EXPECT_EQ(invoke({"survey", "--table", "/nonexistent.jsonl"}).code, 2);
  EXPECT_EQ(invoke({"compute", "--braid", "1 1 1 1 1 1 1", "--limit", "5"}).code, 3);
  EXPECT_EQ(invoke({"classify", "--braid", "1 1"}).code, 2);
  const auto bad = invoke({"compute", "--pd", "X[1,4,2,3];X[3,6,4,5]"});
  EXPECT_NE(bad.err.find("appear once"), std::string::npos) << bad.err;
}

TEST(Cli, Classify) {
  const auto r = invoke({"classify", "--table", fixtures::data_path("census10.jsonl"), "--name", "8_19", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"thickness\": \"thick\""), std::string::npos);
  const auto t = invoke({"classify", "--braid", "1 -2 1 -2"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("H-thin"), std::string::npos) << t.out;
}

TEST(Cli, PlotdataFormat) {
  const auto table = scratch_table("plot", {"3_1", "4_1", "9_42", "5_2"});
  const auto r = invoke({"plotdata", "--table", table.string(), "--y", "det"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("4.056860 1.945910\n"), std::string::npos) << r.out;
  // the trefoil has no volume
  EXPECT_NE(r.err.find("3_1"), std::string::npos) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  double last = -1;
  int count = 0;
  while (std::getline(lines, line)) {
    const double v = std::stod(line.substr(0, line.find(' ')));
    EXPECT_GE(v, last);
    last = v;
    ++count;
  }
  EXPECT_EQ(count, 3);
  const auto r10 = invoke({"plotdata", "--table", table.string(), "--y", "rank", "--log-base", "10"});
  ASSERT_EQ(r10.code, 0) << r10.err;
  EXPECT_NE(r10.out.find("2.029883 0.698970\n"), std::string::npos) << r10.out;
}

TEST(Cli, SurveyIndependentOfJobs) {
  const auto table = scratch_table("survey", {"3_1", "4_1", "5_1", "5_2", "6_1", "7_4", "8_19", "8_20", "9_42"});
  const fs::path dir = table.parent_path();
  const auto one = invoke({"survey", "--table", table.string(), "--jobs", "1", "--out", (dir / "j1").string()});
  const auto three = invoke({"survey", "--table", table.string(), "--jobs", "3", "--out", (dir / "j3").string()});
  ASSERT_EQ(one.code, 0) << one.err;
  ASSERT_EQ(three.code, 0) << three.err;
  EXPECT_EQ(one.out, three.out);
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir / "j1")) {
    EXPECT_EQ(slurp(e.path()), slurp(dir / "j3" / e.path().filename())) << e.path();
    ++files;
  }
  EXPECT_EQ(files, 10);
  const auto json = invoke({"survey", "--table", table.string(), "--jobs", "2", "--json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_NE(json.out.find("8_19"), std::string::npos);
}
