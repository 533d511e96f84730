#include <qspectra/cli/commands.hpp>
#include <qspectra/cli/selftest.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace qspectra;
using namespace qspectra::cli;
namespace fs = std::filesystem;

namespace {

std::string sample(const std::string& name) { return std::string(QSPECTRA_SAMPLES_DIR) + "/collections/" + name; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path temp_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() / ("qspectra_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

struct ScopedDataDir {
  explicit ScopedDataDir(const fs::path& p) { ::setenv("QSPECTRA_DATA", p.c_str(), 1); }
  ~ScopedDataDir() { ::unsetenv("QSPECTRA_DATA"); }
};

struct Outcome {
  int code;
  std::string out, err;
};

Outcome check(const std::string& file, CheckOptions opt = {}) {
  std::ostringstream out, err;
  const int code = cmd_check(sample(file), opt, out, err);
  return {code, out.str(), err.str()};
}

Outcome report(const std::string& id, ReportOptions opt = {}) {
  std::ostringstream out, err;
  const int code = cmd_report(id, opt, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Registry, IdsUniqueAndAlgebrasValidate) {
  std::set<std::string> ids;
  for (const auto& d : registry()) {
    EXPECT_TRUE(ids.insert(d.id).second) << d.id;
    const FiniteCommAlgebra a = d.provider();
    EXPECT_TRUE(validate_algebra(a).ok()) << d.id;
    EXPECT_EQ(a.fano_index(), d.fano_index) << d.id;
    EXPECT_EQ(a.dim_x(), d.dim_x) << d.id;
  }
  EXPECT_THROW(lookup("G(7,3)"), UnknownVariety);
}

TEST(Report, ProjectiveSpace) {
  const Outcome r = report("P3");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("P3"), std::string::npos);
  const auto s = build_report(lookup("P3")).spectrum;
  EXPECT_EQ(s.dim_total, 4u);
  EXPECT_EQ(s.dim_zero_part, 0u);
  EXPECT_TRUE(s.semisimple);
}

TEST(Report, IsotropicMatchesJacobiTarget) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = build_report(lookup("IG(2," + std::to_string(2 * n) + ")"));
    ASSERT_TRUE(r.jacobi.has_value());
    EXPECT_TRUE(r.jacobi->full_match()) << n;
    EXPECT_EQ(r.spectrum.dim_zero_part, static_cast<std::size_t>(n - 1));
    EXPECT_TRUE(r.spectrum.consistent());
  }
}

TEST(Report, UnknownIdIsInputError) {
  const Outcome r = report("Fl(1,2,3)");
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("unknown variety"), std::string::npos);
}

TEST(Report, JsonIsDeterministic) {
  const fs::path dir = temp_dir("json");
  for (const char* id : {"G(2,4)", "IG(2,6)", "Jac(D4)"}) {
    ReportOptions a{(dir / "a.json").string(), false}, b{(dir / "b.json").string(), false};
    ASSERT_EQ(report(id, a).code, 0);
    ASSERT_EQ(report(id, b).code, 0);
    const std::string ja = read_file(dir / "a.json");
    EXPECT_FALSE(ja.empty());
    EXPECT_EQ(ja, read_file(dir / "b.json")) << id;
    EXPECT_EQ(ja.find("seconds"), std::string::npos);
    EXPECT_NO_THROW((void)nlohmann::json::parse(ja));
  }
  ReportOptions with_meta{(dir / "m.json").string(), true};
  ASSERT_EQ(report("P2", with_meta).code, 0);
  EXPECT_TRUE(nlohmann::json::parse(read_file(dir / "m.json")).contains("metadata"));
  fs::remove_all(dir);
}

TEST(Check, SampleExitCodes) {
  EXPECT_EQ(check("minimal_g24.json", {true, true, "", false}).code, kPass);
  EXPECT_EQ(check("beilinson_p3.json", {true, true, "", false}).code, kPass);
  EXPECT_EQ(check("kuznetsov_ig6.json", {true, true, "", false}).code, kPass);
  EXPECT_EQ(check("kapranov_g24.json", {true, false, "", false}).code, kPass);

  const Outcome strict = check("kapranov_g24.json", {false, true, "", false});
  EXPECT_EQ(strict.code, kInputError);
  EXPECT_NE(strict.err.find("collection check failed"), std::string::npos);

  const Outcome bad = check("bad_sigma.json");
  EXPECT_EQ(bad.code, kInputError);
  EXPECT_NE(bad.err.find("support partition not non-increasing"), std::string::npos);

  const Outcome reversed = check("reversed_g24.json", {true, false, "", false});
  EXPECT_EQ(reversed.code, kInputError);
  EXPECT_NE(reversed.err.find("collection check failed"), std::string::npos);
  EXPECT_EQ(check("reversed_g24.json").code, kPass);
}

TEST(Check, MalformedSpecs) {
  const fs::path dir = temp_dir("spec");
  auto run_spec = [&](const std::string& body) {
    std::ofstream(dir / "c.json") << body;
    std::ostringstream out, err;
    const int code = cmd_check((dir / "c.json").string(), {}, out, err);
    return Outcome{code, out.str(), err.str()};
  };
  EXPECT_EQ(run_spec("{").code, kInputError);
  EXPECT_NE(run_spec("{").err.find("parse error"), std::string::npos);
  EXPECT_NE(run_spec(R"j({"variety":"P2","fano_index":3,"support":[1]})j").err.find("starting_block"), std::string::npos);
  EXPECT_EQ(run_spec(R"j({"variety":"P9x","fano_index":3,"starting_block":["O"],"support":[1]})j").code, kInputError);
  EXPECT_EQ(run_spec(R"j({"variety":"P2","fano_index":4,"starting_block":["O"],"support":[1]})j").code, kInputError);
  EXPECT_EQ(run_spec(R"j({"variety":"Jac(A2)","fano_index":1,"starting_block":["O"],"support":[1]})j").code, kInputError);
  EXPECT_EQ(run_spec(R"j({"variety":"P2","fano_index":3,"starting_block":[1],"support":[1]})j").code, kInputError);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_check((dir / "missing.json").string(), {}, out, err), kInputError);
  fs::remove_all(dir);
}

TEST(Selftest, FilteredRun) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_selftest("spectrum", out, err), 0) << out.str();
  EXPECT_NE(out.str().find("checks passed"), std::string::npos);
  EXPECT_EQ(out.str().find("bwb/"), std::string::npos);
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_selftest("topology", out2, err2), 1);
}

TEST(Selftest, ExportRoundTrip) {
  const fs::path dir = temp_dir("export");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_export(dir.string(), out, err), 0) << err.str();
  for (int n = 2; n <= 5; ++n)
    EXPECT_EQ(read_file(ig2_data_file(n, dir)), read_file(ig2_data_file(n, QSPECTRA_DEFAULT_DATA_DIR))) << n;
  fs::remove_all(dir);
}

TEST(Selftest, DetectsPerturbedDataFile) {
  const fs::path dir = temp_dir("perturb");
  {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_export(dir.string(), out, err), 0);
  }
  const fs::path file = ig2_data_file(3, dir);
  nlohmann::json j = nlohmann::json::parse(read_file(file));
  auto& last = j["triples"].back();
  last[3] = last[3].get<long>() + 1;
  std::ofstream(file) << j.dump(1) << "\n";

  ScopedDataDir scope(dir);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_selftest("algebra", out, err), 2);
  EXPECT_NE(out.str().find("FAIL algebra/ig2-data-matches-presentation"), std::string::npos) << out.str();
  fs::remove_all(dir);
}
